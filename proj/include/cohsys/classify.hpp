#pragma once

// Non-emptiness, dimension and irreducibility of the moduli spaces of
// alpha-stable coherent systems for 0 < d <= 2n, and the numerical bounds
// the classification rests on.

#include <optional>
#include <vector>

#include "cohsys/core.hpp"

namespace cohsys {

/// Open interval (lower, upper) of rationals.
struct OpenInterval {
    Rat lower;
    Rat upper;

    bool contains(const Rat& x) const { return lower < x && x < upper; }
};

/// n + (d-n)/g: the largest section count an alpha-semistable system with
/// 0 < d < 2n can have.
Rat bound_kmax(int g, std::int64_t n, std::int64_t d);

/// min{2n, n + g(k-n)}: lower bound on the degree when k > n.
/// Throws DomainError for k <= n.
std::int64_t min_degree(int g, std::int64_t n, std::int64_t k);

/// n + (d-n+m)/g, where m is the dimension of the homomorphisms from the
/// dual span of the canonical system. Throws DomainError for m < 0.
Rat bound_with_hom(int g, std::int64_t n, std::int64_t d, std::int64_t m);

/// Types at d = 2n that are alpha-stable despite k > n + n/g: the dual span
/// of the canonical system (g-1, 2g-2, g) on a non-hyperelliptic curve, and
/// (a, 2a, a+1) for 1 <= a <= g-1 on a hyperelliptic one.
std::vector<ExceptionalTag> exceptional_types(const CurveClass& c);

/// (n + (d-n)/g, ng/(g-1)) when non-empty. Section counts strictly inside
/// admit no alpha-semistable system for large alpha (given h0(E*) = 0).
std::optional<OpenInterval> nonss_window(int g, std::int64_t n, std::int64_t d);

/// Full classification. Requires 0 < d <= 2n; rank one dispatches to
/// classify_rank1. Throws DomainError outside that range.
Verdict classify(const CurveClass& c, const CSType& t);

/// Rank one with 0 < d <= 2: non-empty exactly for (1,1,1), (1,2,1) and,
/// on a hyperelliptic curve, (1,2,2).
Verdict classify_rank1(const CurveClass& c, const CSType& t);

}  // namespace cohsys
