#include <doctest.h>

#include <algorithm>

#include "cohsys/classify.hpp"
#include "cohsys/dims.hpp"

using namespace cohsys;

namespace {

// Non-emptiness conditions restated with integer
// cross-multiplication only: k <= n + (d-n)/g  <=>  g k <= g n + d - n.
struct Expected {
    bool u;
    bool us;
};

Expected integer_conditions(int g, bool hyp, const CSType& t)
{
    const auto [n, d, k] = t;
    const bool bound = g * k <= g * n + d - n;
    if (n == 1) {
        bool ne = (d == 1 && k == 1) || (d == 2 && k == 1) || (hyp && d == 2 && k == 2);
        return {ne, ne};
    }
    if (!hyp) {
        bool u = (bound && !(d == n && k == n)) || (n == g - 1 && d == 2 * g - 2 && k == g);
        return {u, u};
    }
    bool u = (d < 2 * n && bound && !(d == n && k == n)) || (d == 2 * n && k <= n);
    bool us = u;
    if (d == 2 * n && k > n)
        us = g * k <= g * n + n || (k == n + 1 && 2 <= n && n <= g - 1);
    return {u, us};
}

std::vector<CurveClass> curves_up_to(int gmax)
{
    std::vector<CurveClass> cs;
    for (int g = 2; g <= gmax; ++g) {
        cs.emplace_back(g, true);
        if (g >= 3)
            cs.emplace_back(g, false);
    }
    return cs;
}

}  // namespace

TEST_CASE("bound_kmax")
{
    CHECK(bound_kmax(4, 10, 21) == Rat(BigInt(51), BigInt(4)));
    CHECK(bound_kmax(2, 6, 9) == Rat(BigInt(15), BigInt(2)));
    for (int g = 2; g <= 9; ++g)
        CHECK(bound_kmax(g, 7, 7) == Rat(7));
}

TEST_CASE("min_degree")
{
    CHECK(min_degree(3, 2, 3) == 4);
    CHECK(min_degree(2, 4, 6) == 8);
    CHECK(min_degree(5, 3, 4) == 6);
    CHECK(min_degree(2, 5, 6) == 7);
    CHECK_THROWS_AS(min_degree(3, 3, 3), DomainError);
}

TEST_CASE("bound_with_hom")
{
    for (int g = 2; g <= 6; ++g)
        CHECK(bound_with_hom(g, 5, 8, 0) == bound_kmax(g, 5, 8));
    CHECK(bound_with_hom(3, 2, 4, 1) == Rat(3));
    CHECK(bound_with_hom(2, 2, 4, 2) == Rat(4));
    CHECK_THROWS_AS(bound_with_hom(2, 2, 4, -1), DomainError);
}

TEST_CASE("exceptional_types")
{
    auto non = exceptional_types(CurveClass(3, false));
    REQUIRE(non.size() == 1);
    CHECK(non[0].kind == ExceptionalTag::Kind::DualSpanOfCanonical);
    CHECK(non[0].type == CSType{2, 4, 3});

    auto hyp = exceptional_types(CurveClass(3, true));
    REQUIRE(hyp.size() == 2);
    CHECK(hyp[0].type == CSType{1, 2, 2});
    CHECK(hyp[1].type == CSType{2, 4, 3});
    CHECK(hyp[1].a == 2);

    auto g2 = exceptional_types(CurveClass(2, true));
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].type == CSType{1, 2, 2});
}

TEST_CASE("nonss_window")
{
    auto w = nonss_window(4, 10, 21);
    REQUIRE(w);
    CHECK(w->lower == Rat(BigInt(51), BigInt(4)));
    CHECK(w->upper == Rat(BigInt(40), BigInt(3)));
    CHECK(w->contains(Rat(13)));

    auto w2 = nonss_window(3, 3, 6);
    REQUIRE(w2);
    CHECK(w2->lower == Rat(4));
    CHECK(w2->upper == Rat(BigInt(9), BigInt(2)));
    CHECK_FALSE(w2->contains(Rat(4)));

    auto w3 = nonss_window(3, 6, 12);
    REQUIRE(w3);
    CHECK(w3->lower == Rat(8));
    CHECK(w3->upper == Rat(9));

    // d - n >= n g/(g-1) leaves nothing
    CHECK_FALSE(nonss_window(3, 2, 8).has_value());
}

TEST_CASE("classify: canonical dual span on a non-hyperelliptic curve")
{
    auto v = classify(CurveClass(3, false), {2, 4, 3});
    CHECK(v.u_nonempty);
    CHECK(v.us_nonempty);
    CHECK(v.b_nonempty);
    CHECK(v.dim == BigInt(0));
    CHECK(v.beta == 0);
    REQUIRE(v.exceptional);
    CHECK(v.exceptional->kind == ExceptionalTag::Kind::DualSpanOfCanonical);
    CHECK(v.generic_shape == GenericShape::SinglePoint);
    CHECK(v.smooth_GL == Smoothness::Yes);
}

TEST_CASE("classify: hyperelliptic (2,4,3) at g = 3 and g = 4")
{
    auto v3 = classify(CurveClass(3, true), {2, 4, 3});
    CHECK_FALSE(v3.u_nonempty);
    CHECK(v3.us_nonempty);
    CHECK_FALSE(v3.b_nonempty);
    CHECK(v3.dim == BigInt(0));
    CHECK(v3.beta == 0);
    CHECK(v3.smooth_GL == Smoothness::Yes);
    REQUIRE(v3.exceptional);
    CHECK(v3.exceptional->a == 2);

    auto v4 = classify(CurveClass(4, true), {2, 4, 3});
    CHECK(v4.us_nonempty);
    CHECK(v4.dim == BigInt(0));
    CHECK(v4.beta == -2);
    CHECK(v4.smooth_GL == Smoothness::PossiblyNot);
    CHECK(v4.generic_shape == GenericShape::SinglePoint);
}

TEST_CASE("classify: (n,n,n) is empty")
{
    for (auto c : curves_up_to(5)) {
        auto v = classify(c, {2, 2, 2});
        CHECK_FALSE(v.g_alpha_nonempty);
        CHECK_FALSE(v.us_nonempty);
        CHECK_FALSE(v.dim.has_value());
        CHECK_FALSE(v.irreducible.has_value());
        CHECK(v.generic_shape == GenericShape::Empty);
        CHECK(v.smooth_GL == Smoothness::NotApplicable);
    }
}

TEST_CASE("classify: hyperelliptic genus 2, (3,6,4)")
{
    auto v = classify(CurveClass(2, true), {3, 6, 4});
    CHECK_FALSE(v.u_nonempty);
    CHECK(v.us_nonempty);
    CHECK(v.dim == BigInt(6));
    CHECK(v.generic_shape == GenericShape::Generated);
    CHECK_FALSE(v.exceptional);
}

TEST_CASE("classify: generic shapes")
{
    CurveClass c(5, false);
    CHECK(classify(c, {4, 5, 2}).generic_shape == GenericShape::BundleQuotient);
    CHECK(classify(c, {4, 5, 4}).generic_shape == GenericShape::TorsionQuotient);
    // k = 5 <= 4 + 3/5 fails, so (4,7,5) is empty; (10,15,11) has k <= 10 + 5/5
    CHECK(classify(c, {4, 7, 5}).generic_shape == GenericShape::Empty);
    CHECK(classify(c, {10, 15, 11}).generic_shape == GenericShape::Generated);
}

TEST_CASE("classify: range guard")
{
    CurveClass c(3, false);
    CHECK_THROWS_AS(classify(c, {3, 7, 1}), DomainError);
    CHECK_THROWS_AS(classify(c, {3, 0, 1}), DomainError);
    CHECK_THROWS_AS(classify(c, {3, -2, 1}), DomainError);
}

TEST_CASE("classify_rank1")
{
    CurveClass hyp2(2, true), non3(3, false), hyp5(5, true);
    CHECK(classify_rank1(hyp2, {1, 2, 2}).u_nonempty);
    CHECK_FALSE(classify_rank1(non3, {1, 2, 2}).us_nonempty);
    for (auto c : curves_up_to(6)) {
        CHECK(classify_rank1(c, {1, 1, 1}).u_nonempty);
        CHECK(classify_rank1(c, {1, 2, 1}).u_nonempty);
        CHECK_FALSE(classify_rank1(c, {1, 1, 2}).us_nonempty);
        CHECK_FALSE(classify_rank1(c, {1, 2, 3}).us_nonempty);
        // dispatch from classify
        CHECK(classify(c, {1, 2, 1}).dim == BigInt(2));
        CHECK(classify(c, {1, 1, 1}).dim == BigInt(1));
    }
    auto pencil = classify_rank1(hyp5, {1, 2, 2});
    CHECK(pencil.dim == BigInt(0));
    CHECK(pencil.beta == -3);
    REQUIRE(pencil.exceptional);
    CHECK(pencil.exceptional->a == 1);
    CHECK(pencil.generic_shape == GenericShape::SinglePoint);
    CHECK_THROWS_AS(classify_rank1(hyp2, {1, 3, 1}), DomainError);
    CHECK_THROWS_AS(classify_rank1(hyp2, {1, 0, 1}), DomainError);
    CHECK_THROWS_AS(classify_rank1(hyp2, {2, 2, 1}), DomainError);
}

TEST_CASE("hyperelliptic d = 2n, k > n: U^s non-empty iff k = n+1 or k <= n + n/g")
{
    for (int g = 2; g <= 10; ++g) {
        CurveClass c(g, true);
        for (std::int64_t n = 2; n <= 30; ++n)
            for (std::int64_t k = n + 1; k <= 2 * n + 2; ++k) {
                bool simple = k == n + 1 || Rat(k) <= Rat(n) + Rat(BigInt(n), BigInt(g));
                CHECK(classify(c, {n, 2 * n, k}).us_nonempty == simple);
            }
    }
}

TEST_CASE("classify agrees with the integer restatement of its conditions")
{
    for (auto c : curves_up_to(8))
        for (std::int64_t n = 1; n <= 20; ++n) {
            const std::int64_t dmax = n == 1 ? 2 : 2 * n;
            for (std::int64_t d = 1; d <= dmax; ++d)
                for (std::int64_t k = 1; k <= 2 * n + 2; ++k) {
                    CSType t{n, d, k};
                    auto v = classify(c, t);
                    auto e = integer_conditions(c.genus(), c.hyperelliptic(), t);
                    INFO("g=", c.genus(), " hyp=", c.hyperelliptic(), " t=", t.to_string());
                    REQUIRE(v.u_nonempty == e.u);
                    REQUIRE(v.us_nonempty == e.us);
                }
        }
}

TEST_CASE("verdict invariants on a grid")
{
    for (auto c : curves_up_to(7)) {
        const int g = c.genus();
        const auto tags = exceptional_types(c);
        for (std::int64_t n = 2; n <= 16; ++n)
            for (std::int64_t d = 1; d <= 2 * n; ++d)
                for (std::int64_t k = 1; k <= 2 * n + 2; ++k) {
                    CSType t{n, d, k};
                    auto v = classify(c, t);
                    CHECK((!v.u_nonempty || v.us_nonempty));
                    CHECK((!v.us_nonempty || v.g_alpha_nonempty));
                    CHECK(v.b_nonempty == v.u_nonempty);
                    CHECK((v.generic_shape == GenericShape::Empty) == !v.g_alpha_nonempty);
                    CHECK(v.beta == beta(g, t));
                    if (d < 2 * n && Rat(k) > bound_kmax(g, n, d))
                        CHECK_FALSE(v.g_alpha_nonempty);
                    if (v.us_nonempty && k > n)
                        CHECK(d >= min_degree(g, n, k));
                    if (v.exceptional) {
                        bool listed = std::any_of(tags.begin(), tags.end(),
                                                  [&](const ExceptionalTag& x) { return x == *v.exceptional; });
                        CHECK(listed);
                    }
                }
    }
}
