#include "cohsys/walls.hpp"

#include <algorithm>

namespace cohsys {

bool WallSet::contains(const Rat& a) const
{
    return std::binary_search(walls.begin(), walls.end(), a);
}

Rat slope(const CSType& t)
{
    return Rat(BigInt(t.d), BigInt(t.n));
}

Rat alpha_slope(const CSType& t, const Rat& a)
{
    return slope(t) + a * Rat(BigInt(t.k), BigInt(t.n));
}

AlphaRange admissible_range(const CSType& t)
{
    if (t.d <= 0)
        throw DomainError("admissible range needs d > 0, got type " + t.to_string());
    AlphaRange r;
    if (t.k < t.n)
        r.sup = Rat(BigInt(t.d), BigInt(t.n - t.k));
    return r;
}

std::optional<Rat> wall_for_subtype(const CSType& t, const CSType& sub)
{
    // mu_a(sub) = mu_a(t)  <=>  a (k' n - k n') = d n' - d' n
    BigInt den = BigInt(sub.k) * t.n - BigInt(t.k) * sub.n;
    if (den == 0)
        return std::nullopt;
    BigInt num = BigInt(t.d) * sub.n - BigInt(sub.d) * t.n;
    return Rat(num, den);
}

WallSet candidate_walls(const CSType& t)
{
    AlphaRange range = admissible_range(t);
    WallSet ws;
    ws.type = t;
    ws.admissible_sup = range.sup;

    for (std::int64_t n1 = 1; n1 < t.n; ++n1) {
        for (std::int64_t k1 = 0; k1 <= t.k; ++k1) {
            if (k1 * t.n == t.k * n1)
                continue;
            for (std::int64_t d1 = 0; d1 <= t.d; ++d1) {
                CSType sub{n1, d1, k1};
                auto w = wall_for_subtype(t, sub);
                if (w && range.contains(*w))
                    ws.witnesses[*w].push_back(sub);
            }
        }
    }
    ws.walls.reserve(ws.witnesses.size());
    for (const auto& [w, subs] : ws.witnesses)
        ws.walls.push_back(w);
    return ws;
}

bool is_candidate_wall(const CSType& t, const Rat& a)
{
    if (!admissible_range(t).contains(a))
        return false;
    const BigInt p = a.numerator(), q = a.denominator();
    // d' n q = d n' q - p (k' n - k n')
    const BigInt nq = BigInt(t.n) * q;
    for (std::int64_t n1 = 1; n1 < t.n; ++n1) {
        for (std::int64_t k1 = 0; k1 <= t.k; ++k1) {
            const BigInt gap = BigInt(k1) * t.n - BigInt(t.k) * n1;
            if (gap == 0)
                continue;
            const BigInt rhs = BigInt(t.d) * n1 * q - p * gap;
            if (rhs % nq != 0)
                continue;
            const BigInt d1 = rhs / nq;
            if (d1 >= 0 && d1 <= t.d)
                return true;
        }
    }
    return false;
}

std::size_t chamber_index(const WallSet& ws, const Rat& a)
{
    AlphaRange range{Rat(0), ws.admissible_sup};
    if (!range.contains(a))
        throw DomainError("alpha " + a.to_string() + " outside the admissible range of " +
                          ws.type.to_string());
    auto it = std::lower_bound(ws.walls.begin(), ws.walls.end(), a);
    if (it != ws.walls.end() && *it == a)
        throw DomainError("alpha " + a.to_string() + " is a critical value of " + ws.type.to_string());
    return static_cast<std::size_t>(it - ws.walls.begin());
}

std::size_t chamber_index(const CSType& t, const Rat& a)
{
    return chamber_index(candidate_walls(t), a);
}

}  // namespace cohsys
