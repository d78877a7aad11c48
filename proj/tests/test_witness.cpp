#include <doctest.h>

#include <algorithm>

#include "cohsys/classify.hpp"
#include "cohsys/dims.hpp"
#include "cohsys/serialize.hpp"
#include "cohsys/witness.hpp"

using namespace cohsys;

namespace {

const Check* find_check(const Certificate& c, std::string_view prefix)
{
    auto it = std::find_if(c.checks.begin(), c.checks.end(),
                           [&](const Check& x) { return x.label.rfind(prefix, 0) == 0; });
    return it == c.checks.end() ? nullptr : &*it;
}

BigInt lhs_int(const Check& c) { return std::get<BigInt>(c.lhs); }

void check_extension_shape(int g, const Certificate& c)
{
    REQUIRE(c.target);
    REQUIRE(c.subtypes.size() == 2);
    CHECK(c.subtypes[0] + c.subtypes[1] == *c.target);
    CHECK(beta_additivity_residual(g, c.subtypes[0], c.subtypes[1]) == 0);
    auto v = classify(CurveClass(g, true), *c.target);
    CHECK(v.us_nonempty);
}

}  // namespace

TEST_CASE("dual_span_type")
{
    CHECK(dual_span_type({2, 4, 3}) == CSType{1, 4, 3});
    CHECK(dual_span_type({5, 9, 7}) == CSType{2, 9, 7});
    CHECK_THROWS_AS(dual_span_type({3, 6, 3}), DomainError);
    for (std::int64_t n = 1; n <= 10; ++n)
        for (std::int64_t k = n + 1; k <= 3 * n; ++k) {
            CSType t{n, 7, k};
            CHECK(dual_span_type(dual_span_type(t)) == t);
        }
}

TEST_CASE("hyperelliptic_a matches a direct search")
{
    CHECK(hyperelliptic_a(6, 9) == 2);
    CHECK(hyperelliptic_a(2, 3) == 2);
    CHECK(hyperelliptic_a(4, 8) == 1);
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t k = n + 1; k <= 2 * n; ++k) {
            // n(1 + 1/a) >= k > n(1 + 1/(a+1))
            std::int64_t found = 0;
            for (std::int64_t a = 1; a <= n; ++a)
                if (n * (a + 1) >= k * a && k * (a + 1) > n * (a + 2)) {
                    CHECK(found == 0);
                    found = a;
                }
            CHECK(hyperelliptic_a(n, k) == found);
        }
    CHECK_THROWS_AS(hyperelliptic_a(3, 3), DomainError);
    CHECK_THROWS_AS(hyperelliptic_a(3, 7), DomainError);
}

TEST_CASE("certificate names round-trip")
{
    for (auto n : {CertificateName::Hyp1, CertificateName::Hyp2, CertificateName::Hyp3,
                   CertificateName::Hyp4, CertificateName::Ex7})
        CHECK(parse_certificate_name(to_string(n)) == n);
    CHECK_THROWS_AS(parse_certificate_name("hyp5"), DomainError);
}

TEST_CASE("hyp1")
{
    auto c = certificate_hyp1(3, 2);
    CHECK(c.passed);
    CHECK(c.target == CSType{2, 4, 3});
    auto bad = certificate_hyp1(3, 1);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.hypotheses_hold());
}

TEST_CASE("hyp2 examples")
{
    auto c = certificate_hyp2(2, 6, 2);
    CHECK(c.passed);
    CHECK(c.hypotheses_hold());
    CHECK(c.wall == Rat(3));
    CHECK(c.subtypes == std::vector<CSType>{{5, 9, 7}, {1, 3, 1}});
    const Check* c21_row = find_check(c, "C21 = 2n - 2 - r");
    REQUIRE(c21_row);
    CHECK(lhs_int(*c21_row) == 8);
    check_extension_shape(2, c);

    auto c2 = certificate_hyp2(2, 8, 3);
    CHECK(c2.passed);
    CHECK(lhs_int(*find_check(c2, "C21 = 2n - 2 - r")) == 11);
    CHECK(c2.wall == Rat(BigInt(8), BigInt(3)));

    auto bad = certificate_hyp2(3, 7, 2);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.hypotheses_hold());
    CHECK_FALSE(bad.target.has_value());
}

TEST_CASE("hyp3 examples")
{
    auto c = certificate_hyp3(3, 2);
    CHECK(c.passed);
    CHECK(c.target == CSType{7, 14, 9});
    const Check* row0 = find_check(c, "C12 of");
    REQUIRE(row0);
    CHECK(lhs_int(*row0) == 3);
    check_extension_shape(3, c);

    auto c3 = certificate_hyp3(3, 3);
    CHECK(c3.passed);
    const Check* row1 = find_check(c3, "C12 of (4,8,5)");
    REQUIRE(row1);
    CHECK(lhs_int(*row1) == 7);

    CHECK(certificate_hyp3(2, 4).passed);
    CHECK_FALSE(certificate_hyp3(3, 1).passed);
}

TEST_CASE("hyp4 examples")
{
    auto c = certificate_hyp4(3, 2);
    CHECK(c.passed);
    CHECK(c.target == CSType{6, 12, 8});
    const Check* row0 = find_check(c, "C12 of");
    REQUIRE(row0);
    CHECK(lhs_int(*row0) == 2);
    check_extension_shape(3, c);

    CHECK(certificate_hyp4(2, 3).passed);
    CHECK(certificate_hyp4(4, 2).passed);
    CHECK_FALSE(certificate_hyp4(4, 0).passed);
}

TEST_CASE("ex7 examples")
{
    auto c = example_d_gt_2n(4, 3);
    CHECK(c.passed);
    CHECK(c.target == CSType{10, 21, 13});
    auto w = nonss_window(4, 10, 21);
    REQUIRE(w);
    CHECK(w->lower == Rat(BigInt(51), BigInt(4)));

    auto c5 = example_d_gt_2n(5, 3);
    CHECK(c5.passed);
    CHECK(c5.target == CSType{13, 27, 16});
    CHECK(nonss_window(5, 13, 27)->lower == Rat(BigInt(79), BigInt(5)));

    auto bad = example_d_gt_2n(4, 4);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.hypotheses_hold());
    CHECK_FALSE(example_d_gt_2n(2, 3).passed);
}

TEST_CASE("certificates pass across their parameter ranges")
{
    for (int g = 2; g <= 12; ++g) {
        for (std::int64_t n = 2; n <= 20; ++n)
            CHECK(certificate_hyp1(g, n).passed);
        for (std::int64_t n = 3; n <= 60; ++n)
            for (std::int64_t r = 2; r * g <= n - 2; ++r) {
                auto c = certificate_hyp2(g, n, r);
                INFO("g=", g, " n=", n, " r=", r);
                CHECK(c.passed);
                check_extension_shape(g, c);
            }
        for (std::int64_t r = 2; r <= 8; ++r) {
            auto c3 = certificate_hyp3(g, r);
            auto c4 = certificate_hyp4(g, r);
            INFO("g=", g, " r=", r);
            CHECK(c3.passed);
            CHECK(c4.passed);
            check_extension_shape(g, c3);
            check_extension_shape(g, c4);
        }
        for (std::int64_t r = 3; r <= g - 1; ++r) {
            auto c = example_d_gt_2n(g, r);
            INFO("g=", g, " r=", r);
            CHECK(c.passed);
            CHECK(c.target->d > 2 * c.target->n);
        }
    }
}

TEST_CASE("a failing hypothesis stops the certificate early")
{
    auto c = certificate_hyp2(2, 5, 2);
    CHECK_FALSE(c.passed);
    CHECK(c.subtypes.empty());
    for (const auto& ch : c.checks)
        CHECK(ch.hypothesis);
}

TEST_CASE("certificate JSON shape")
{
    auto j = certificate_to_json(certificate_hyp2(2, 6, 2));
    CHECK(j["name"] == "hyp2");
    CHECK(j["wall"] == "3/1");
    CHECK(j["passed"] == true);
    REQUIRE(j["checks"].is_array());
    for (const auto& ch : j["checks"]) {
        CHECK(ch.contains("label"));
        CHECK(ch.contains("lhs"));
        CHECK(ch.contains("rel"));
        CHECK(ch.contains("rhs"));
        CHECK(ch["ok"] == true);
    }
    CHECK(j["subtypes"][0] == Json::array({5, 9, 7}));
}
