#include "cohsys/classify.hpp"

#include "cohsys/dims.hpp"

namespace cohsys {

namespace {

void require_genus(int g)
{
    if (g < 2)
        throw DomainError("genus must be at least 2, got " + std::to_string(g));
}

// Hyperelliptic (n, 2n, n+1) with n < g-1: a single point of negative
// expected dimension.
bool is_hyperelliptic_point(const CurveClass& c, const CSType& t)
{
    return c.hyperelliptic() && t.d == 2 * t.n && t.k == t.n + 1 && t.n < c.genus() - 1;
}

// Fills in everything that follows from the non-emptiness flags.
Verdict assemble(const CurveClass& c, const CSType& t, bool u, bool us)
{
    const int g = c.genus();
    Verdict v;
    v.curve = c;
    v.type = t;
    v.u_nonempty = u;
    v.us_nonempty = us;
    v.b_nonempty = u;
    v.g_alpha_nonempty = us;
    v.beta = beta(g, t);

    if (!us)
        return v;

    const bool point = is_hyperelliptic_point(c, t);
    v.dim = point ? BigInt(0) : v.beta;
    v.irreducible = true;
    v.smooth_GL = point ? Smoothness::PossiblyNot : Smoothness::Yes;

    if (t.d == 2 * t.n && Rat(t.k) > bound_kmax(g, t.n, t.d)) {
        if (c.hyperelliptic()) {
            v.exceptional = ExceptionalTag{ExceptionalTag::Kind::HyperellipticPencilPower, t,
                                           static_cast<int>(t.n)};
        } else {
            v.exceptional = ExceptionalTag{ExceptionalTag::Kind::DualSpanOfCanonical, t, 0};
        }
    }

    if (v.exceptional)
        v.generic_shape = GenericShape::SinglePoint;
    else if (t.k < t.n)
        v.generic_shape = GenericShape::BundleQuotient;
    else if (t.k == t.n)
        v.generic_shape = GenericShape::TorsionQuotient;
    else
        v.generic_shape = GenericShape::Generated;
    return v;
}

}  // namespace

Rat bound_kmax(int g, std::int64_t n, std::int64_t d)
{
    return bound_with_hom(g, n, d, 0);
}

std::int64_t min_degree(int g, std::int64_t n, std::int64_t k)
{
    require_genus(g);
    if (k <= n)
        throw DomainError("min_degree needs k > n");
    return std::min(2 * n, n + g * (k - n));
}

Rat bound_with_hom(int g, std::int64_t n, std::int64_t d, std::int64_t m)
{
    require_genus(g);
    if (m < 0)
        throw DomainError("hom dimension must be non-negative");
    return Rat(n) + Rat(BigInt(d - n + m), BigInt(g));
}

std::vector<ExceptionalTag> exceptional_types(const CurveClass& c)
{
    const int g = c.genus();
    std::vector<ExceptionalTag> tags;
    if (!c.hyperelliptic()) {
        tags.push_back({ExceptionalTag::Kind::DualSpanOfCanonical, CSType{g - 1, 2 * g - 2, g}, 0});
        return tags;
    }
    for (int a = 1; a <= g - 1; ++a)
        tags.push_back({ExceptionalTag::Kind::HyperellipticPencilPower, CSType{a, 2 * a, a + 1}, a});
    return tags;
}

std::optional<OpenInterval> nonss_window(int g, std::int64_t n, std::int64_t d)
{
    require_genus(g);
    OpenInterval w{bound_kmax(g, n, d), Rat(BigInt(n) * g, BigInt(g - 1))};
    if (!(w.lower < w.upper))
        return std::nullopt;
    return w;
}

Verdict classify(const CurveClass& c, const CSType& t)
{
    if (t.d <= 0 || t.d > 2 * t.n)
        throw DomainError("classification covers 0 < d <= 2n only, got type " + t.to_string());
    if (t.n == 1)
        return classify_rank1(c, t);

    const int g = c.genus();
    const bool hyp = c.hyperelliptic();
    const bool top_degree = t.d == 2 * t.n;
    const bool within_bound = Rat(t.k) <= bound_kmax(g, t.n, t.d);

    bool u = false;
    if (!top_degree)
        u = within_bound && t != CSType{t.n, t.n, t.n};
    else if (!hyp)
        u = within_bound || t == CSType{g - 1, 2 * g - 2, g};
    else
        u = t.k <= t.n;

    bool us = u;
    if (top_degree && hyp && t.k > t.n)
        us = within_bound || (t.k == t.n + 1 && t.n <= g - 1);

    return assemble(c, t, u, us);
}

Verdict classify_rank1(const CurveClass& c, const CSType& t)
{
    if (t.n != 1)
        throw DomainError("classify_rank1 needs rank one, got type " + t.to_string());
    if (t.d <= 0 || t.d > 2)
        throw DomainError("rank one classification covers 0 < d <= 2 only, got type " + t.to_string());
    const bool nonempty = t == CSType{1, 1, 1} || t == CSType{1, 2, 1} ||
                          (c.hyperelliptic() && t == CSType{1, 2, 2});
    return assemble(c, t, nonempty, nonempty);
}

}  // namespace cohsys
