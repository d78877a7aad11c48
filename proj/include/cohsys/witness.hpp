#pragma once

// Arithmetic certificates for the extension constructions that populate
// the hyperelliptic d = 2n cases, and for the d > 2n example family.
//
// A certificate records the types involved and a list of checks. Hypothesis
// checks guard the construction's preconditions; when one fails, no further
// checks are attempted and the certificate does not pass. Every closed-form
// value is compared against the generic C12/C21 evaluation.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cohsys/core.hpp"

namespace cohsys {

enum class CertificateName { Hyp1, Hyp2, Hyp3, Hyp4, Ex7 };

std::string_view to_string(CertificateName name);
/// Throws DomainError for an unknown name.
CertificateName parse_certificate_name(std::string_view text);

enum class Relation { Eq, Lt, Le, Gt, Ge };

std::string_view to_string(Relation r);

using CheckValue = std::variant<BigInt, Rat, bool>;

struct Check {
    std::string label;
    CheckValue lhs;
    Relation rel;
    CheckValue rhs;
    bool ok = false;
    bool hypothesis = false;
};

struct Certificate {
    CertificateName name;
    /// Ordered parameters, e.g. {"g", 3}, {"r", 2}.
    std::vector<std::pair<std::string, std::int64_t>> params;
    /// Target type of the construction.
    std::optional<CSType> target;
    /// For extensions 0 -> t1 -> t -> t2 -> 0: {t1, t2}.
    std::vector<CSType> subtypes;
    std::optional<Rat> wall;
    std::vector<Check> checks;
    bool passed = false;

    bool hypotheses_hold() const;
};

/// Type of the dual span D(F, W) of a generated system with h0(F*) = 0:
/// (n, d, k) -> (k - n, d, k). Throws DomainError for k <= n.
CSType dual_span_type(const CSType& t);

/// The unique a >= 1 with n(1 + 1/a) >= k > n(1 + 1/(a+1)).
/// Throws DomainError unless n < k <= 2n.
std::int64_t hyperelliptic_a(std::int64_t n, std::int64_t k);

/// (n, 2n, n+1) realized by L^n with a generating (n+1)-dimensional space.
Certificate certificate_hyp1(int g, std::int64_t n);

/// (n, 2n, n+r) as an extension of (1,3,1) by (n-1, 2n-3, n+r-1) flipping at
/// alpha = n/r; requires 2 <= r <= (n-2)/g.
Certificate certificate_hyp2(int g, std::int64_t n, std::int64_t r);

/// (gr+1, 2gr+2, gr+r+1) as an extension of (g-1, 2g-2, g) by
/// (g(r-1)+2, 2g(r-1)+4, g(r-1)+r+1); requires r >= 2.
Certificate certificate_hyp3(int g, std::int64_t r);

/// (gr, 2gr, gr+r) as an extension of (g-1, 2g-2, g) by
/// (g(r-1)+1, 2g(r-1)+2, g(r-1)+r); requires r >= 2.
Certificate certificate_hyp4(int g, std::int64_t r);

/// (rg-r+1, 2rg-2r+3, rg+1) on a non-hyperelliptic curve, with k strictly
/// inside the large-alpha non-semistability window; requires 3 <= r <= g-1.
Certificate example_d_gt_2n(int g, std::int64_t r);

}  // namespace cohsys
