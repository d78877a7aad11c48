#pragma once

// Slopes, alpha-slopes and the chamber structure of the alpha-line.

#include <map>
#include <optional>
#include <vector>

#include "cohsys/core.hpp"

namespace cohsys {

/// Open interval (0, sup) of parameters; sup absent means +infinity.
struct AlphaRange {
    Rat lower;
    std::optional<Rat> sup;

    bool contains(const Rat& a) const { return a > lower && (!sup || a < *sup); }
};

/// Candidate critical values of a type, sorted ascending, all inside the
/// admissible range. This is a superset of the critical values: the subtypes
/// producing each wall are not checked for geometric realizability.
struct WallSet {
    CSType type;
    std::vector<Rat> walls;
    std::optional<Rat> admissible_sup;
    /// Subtypes (n', d', k') producing each wall; k' may be 0 here.
    std::map<Rat, std::vector<CSType>> witnesses;

    bool contains(const Rat& a) const;
};

/// d / n.
Rat slope(const CSType& t);

/// d/n + a*k/n.
Rat alpha_slope(const CSType& t, const Rat& a);

/// (0, d/(n-k)) when k < n, else (0, inf). Throws DomainError for d <= 0.
AlphaRange admissible_range(const CSType& t);

/// Wall value at which a subtype (n', d', k') has the same alpha-slope as t,
/// or nothing when k'/n' = k/n.
std::optional<Rat> wall_for_subtype(const CSType& t, const CSType& sub);

/// Enumerates (d n' - d' n)/(k' n - k n') over 1 <= n' < n, 0 <= k' <= k,
/// 0 <= d' <= d and keeps the values in the admissible range. Rank one
/// types have no proper subtypes and yield an empty set.
WallSet candidate_walls(const CSType& t);

/// Membership in candidate_walls(t) without enumerating it: solves for d'
/// over every (n', k'). Cost O(n k) instead of O(n k d).
bool is_candidate_wall(const CSType& t, const Rat& a);

/// 0-based index of the open chamber containing a; the last chamber is the
/// large-alpha one. Throws DomainError when a is on a wall or out of range.
std::size_t chamber_index(const CSType& t, const Rat& a);
std::size_t chamber_index(const WallSet& ws, const Rat& a);

}  // namespace cohsys
