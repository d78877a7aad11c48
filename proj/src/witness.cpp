#include "cohsys/witness.hpp"

#include <algorithm>

#include "cohsys/classify.hpp"
#include "cohsys/dims.hpp"
#include "cohsys/walls.hpp"

namespace cohsys {

namespace {

Rat as_rat(const CheckValue& v)
{
    if (const auto* i = std::get_if<BigInt>(&v))
        return Rat(*i);
    return std::get<Rat>(v);
}

bool holds(const CheckValue& lhs, Relation rel, const CheckValue& rhs)
{
    if (std::holds_alternative<bool>(lhs) || std::holds_alternative<bool>(rhs)) {
        if (rel != Relation::Eq || lhs.index() != rhs.index())
            return false;
        return std::get<bool>(lhs) == std::get<bool>(rhs);
    }
    Rat a = as_rat(lhs), b = as_rat(rhs);
    switch (rel) {
    case Relation::Eq: return a == b;
    case Relation::Lt: return a < b;
    case Relation::Le: return a <= b;
    case Relation::Gt: return a > b;
    case Relation::Ge: return a >= b;
    }
    return false;
}

class Builder {
public:
    explicit Builder(CertificateName name) { cert_.name = name; }

    Builder& param(std::string key, std::int64_t value)
    {
        cert_.params.emplace_back(std::move(key), value);
        return *this;
    }

    bool hypothesis(std::string label, CheckValue lhs, Relation rel, CheckValue rhs)
    {
        return add(std::move(label), std::move(lhs), rel, std::move(rhs), true);
    }

    bool check(std::string label, CheckValue lhs, Relation rel, CheckValue rhs)
    {
        return add(std::move(label), std::move(lhs), rel, std::move(rhs), false);
    }

    Certificate& cert() { return cert_; }

    Certificate finish()
    {
        cert_.passed = !cert_.checks.empty() &&
                       std::all_of(cert_.checks.begin(), cert_.checks.end(),
                                   [](const Check& c) { return c.ok; });
        return std::move(cert_);
    }

private:
    bool add(std::string label, CheckValue lhs, Relation rel, CheckValue rhs, bool hyp)
    {
        bool ok = holds(lhs, rel, rhs);
        cert_.checks.push_back(Check{std::move(label), std::move(lhs), rel, std::move(rhs), ok, hyp});
        return ok;
    }

    Certificate cert_;
};

BigInt I(std::int64_t v) { return BigInt(v); }

// Componentwise t1 + t2 = target, recorded as three integer checks.
void check_additivity(Builder& b, const CSType& t1, const CSType& t2, const CSType& target)
{
    CSType sum = t1 + t2;
    b.check("rank: n1 + n2 = n", I(sum.n), Relation::Eq, I(target.n));
    b.check("degree: d1 + d2 = d", I(sum.d), Relation::Eq, I(target.d));
    b.check("sections: k1 + k2 = k", I(sum.k), Relation::Eq, I(target.k));
}

bool genus_hypothesis(Builder& b, int g, int min_genus)
{
    return b.hypothesis("hypothesis: g >= " + std::to_string(min_genus), I(g), Relation::Ge,
                        I(min_genus));
}

// Shared tail of the gr+1 and gr constructions: the quotient by D(L^{g-1})
// and the C12 count for every destabilizing candidate of type
// (r1' g + 1, 2(r1' g + 1), r1'(g+1) + 1) inside t1.
struct ClosedFormRow {
    std::int64_t r1;
    BigInt closed;
};

void check_sub_extension(Builder& b, int g, const CSType& t1, const std::vector<ClosedFormRow>& rows)
{
    for (const auto& row : rows) {
        std::int64_t n1p = row.r1 * g + 1;
        CSType sub{n1p, 2 * n1p, n1p + row.r1};
        CSType quotient{t1.n - sub.n, t1.d - sub.d, t1.k - sub.k};
        std::string tag = "r1'=" + std::to_string(row.r1);
        b.check("C12 of " + sub.to_string() + " -> t1 -> " + quotient.to_string() +
                    ": closed form = generic evaluation [" + tag + "]",
                row.closed, Relation::Eq, c12(g, sub, quotient));
        b.check("C12 > 0, so generic t1 has no such subsystem [" + tag + "]", row.closed,
                Relation::Gt, I(0));
    }
}

}  // namespace

std::string_view to_string(CertificateName name)
{
    switch (name) {
    case CertificateName::Hyp1: return "hyp1";
    case CertificateName::Hyp2: return "hyp2";
    case CertificateName::Hyp3: return "hyp3";
    case CertificateName::Hyp4: return "hyp4";
    case CertificateName::Ex7: return "ex7";
    }
    return "?";
}

CertificateName parse_certificate_name(std::string_view text)
{
    for (auto n : {CertificateName::Hyp1, CertificateName::Hyp2, CertificateName::Hyp3,
                   CertificateName::Hyp4, CertificateName::Ex7}) {
        if (to_string(n) == text)
            return n;
    }
    throw DomainError("unknown certificate name '" + std::string(text) + "'");
}

std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::Eq: return "=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
    }
    return "?";
}

bool Certificate::hypotheses_hold() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return !c.hypothesis || c.ok; });
}

CSType dual_span_type(const CSType& t)
{
    if (t.k <= t.n)
        throw DomainError("dual span needs k > n, got type " + t.to_string());
    return CSType{t.k - t.n, t.d, t.k};
}

std::int64_t hyperelliptic_a(std::int64_t n, std::int64_t k)
{
    if (n < 1 || k <= n || k > 2 * n)
        throw DomainError("hyperelliptic_a needs n < k <= 2n");
    // a(k-n) <= n < (a+1)(k-n)
    return n / (k - n);
}

Certificate certificate_hyp1(int g, std::int64_t n)
{
    Builder b(CertificateName::Hyp1);
    b.param("g", g).param("n", n);
    bool ok = genus_hypothesis(b, g, 2);
    ok = b.hypothesis("hypothesis: n >= 2", I(n), Relation::Ge, I(2)) && ok;
    if (!ok)
        return b.finish();

    CSType target{n, 2 * n, n + 1};
    b.cert().target = target;
    // E = L^{+n}, L of type (1,2,2); V generates E with dim V = n + 1.
    b.check("rank of L^n summands", I(n * 1), Relation::Eq, I(target.n));
    b.check("degree of L^n summands", I(n * 2), Relation::Eq, I(target.d));
    b.check("sections: k = n + 1", I(target.k), Relation::Eq, I(n + 1));
    b.check("generated V needs k <= h0(L^n) = 2n", I(target.k), Relation::Le, I(2 * n));
    return b.finish();
}

Certificate certificate_hyp2(int g, std::int64_t n, std::int64_t r)
{
    Builder b(CertificateName::Hyp2);
    b.param("g", g).param("n", n).param("r", r);
    bool ok = genus_hypothesis(b, g, 2);
    ok = b.hypothesis("hypothesis: r >= 2", I(r), Relation::Ge, I(2)) && ok;
    ok = b.hypothesis("hypothesis: r <= (n-2)/g", I(r), Relation::Le,
                      Rat(BigInt(n - 2), BigInt(std::max(g, 1)))) && ok;
    if (!ok)
        return b.finish();

    const CSType target{n, 2 * n, n + r};
    const CSType t1{n - 1, 2 * n - 3, n + r - 1};
    const CSType t2{1, 3, 1};
    auto& cert = b.cert();
    cert.target = target;
    cert.subtypes = {t1, t2};
    const Rat alpha_c{BigInt(n), BigInt(r)};
    cert.wall = alpha_c;

    check_additivity(b, t1, t2, target);

    BigInt c = c21(g, t1, t2);
    b.check("C21 = 2n - 2 - r", c, Relation::Eq, I(2 * n - 2 - r));
    b.check("C21 > 0, so non-trivial extensions exist", c, Relation::Gt, I(0));
    b.check("dim Hom(V2, H0(E1)/V1) <= (n-2)/g - r < C21",
            Rat(BigInt(n - 2), BigInt(g)) - Rat(r), Relation::Lt, c);
    b.check("d1 < 2 n1", I(t1.d), Relation::Lt, I(2 * t1.n));
    b.check("k1 <= n1 + (d1-n1)/g, so U(n1,d1,k1) is non-empty", I(t1.k), Relation::Le,
            bound_kmax(g, t1.n, t1.d));
    b.check("mu_ac(t1) = 3 + n/r", alpha_slope(t1, alpha_c), Relation::Eq, Rat(3) + alpha_c);
    b.check("mu_ac(t2) = 3 + n/r", alpha_slope(t2, alpha_c), Relation::Eq, Rat(3) + alpha_c);
    b.check("k1/n1 > k2/n2, so mu(t1) < mu(t2) just below the wall",
            Rat(BigInt(t1.k), BigInt(t1.n)), Relation::Gt, Rat(BigInt(t2.k), BigInt(t2.n)));
    b.check("alpha_c = n/r is a candidate wall of the target", is_candidate_wall(target, alpha_c),
            Relation::Eq, true);
    return b.finish();
}

Certificate certificate_hyp3(int g, std::int64_t r)
{
    Builder b(CertificateName::Hyp3);
    b.param("g", g).param("r", r);
    bool ok = genus_hypothesis(b, g, 2);
    ok = b.hypothesis("hypothesis: r >= 2", I(r), Relation::Ge, I(2)) && ok;
    if (!ok)
        return b.finish();

    const std::int64_t m = g * (r - 1);
    const CSType target{g * r + 1, 2 * g * r + 2, g * r + r + 1};
    const CSType t1{m + 2, 2 * m + 4, m + r + 1};
    const CSType t2{g - 1, 2 * g - 2, g};
    auto& cert = b.cert();
    cert.target = target;
    cert.subtypes = {t1, t2};

    check_additivity(b, t1, t2, target);
    BigInt c = c21(g, t1, t2);
    b.check("C21 = n1 + g(n1 - k1) = 2", c, Relation::Eq, I(2));
    b.check("C21 > 0, so non-trivial extensions exist", c, Relation::Gt, I(0));

    // n1' = r1' g + 1 with 0 <= r1' <= (r-1)/2.
    std::vector<ClosedFormRow> rows;
    for (std::int64_t r1 = 0; 2 * r1 <= r - 1; ++r1) {
        BigInt closed = BigInt(r - 1 - r1) * (g - 1) * (r1 + 1) + 2 * r1 + 1;
        rows.push_back({r1, closed});
    }
    check_sub_extension(b, g, t1, rows);
    return b.finish();
}

Certificate certificate_hyp4(int g, std::int64_t r)
{
    Builder b(CertificateName::Hyp4);
    b.param("g", g).param("r", r);
    bool ok = genus_hypothesis(b, g, 2);
    ok = b.hypothesis("hypothesis: r >= 2", I(r), Relation::Ge, I(2)) && ok;
    if (!ok)
        return b.finish();

    const std::int64_t m = g * (r - 1);
    const CSType target{g * r, 2 * g * r, g * r + r};
    const CSType t1{m + 1, 2 * m + 2, m + r};
    const CSType t2{g - 1, 2 * g - 2, g};
    auto& cert = b.cert();
    cert.target = target;
    cert.subtypes = {t1, t2};

    check_additivity(b, t1, t2, target);
    BigInt c = c21(g, t1, t2);
    b.check("C21 = n1 + g(n1 - k1) = 1", c, Relation::Eq, I(1));
    b.check("C21 > 0, so non-trivial extensions exist", c, Relation::Gt, I(0));

    // n1' = r1' g + 1 with 0 <= r1' < r - 1.
    std::vector<ClosedFormRow> rows;
    for (std::int64_t r1 = 0; r1 < r - 1; ++r1)
        rows.push_back({r1, BigInt(r - 1 - r1) * (g - 1) * (r1 + 1)});
    check_sub_extension(b, g, t1, rows);
    return b.finish();
}

Certificate example_d_gt_2n(int g, std::int64_t r)
{
    Builder b(CertificateName::Ex7);
    b.param("g", g).param("r", r);
    bool ok = genus_hypothesis(b, g, 3);
    ok = b.hypothesis("hypothesis: r >= 3", I(r), Relation::Ge, I(3)) && ok;
    ok = b.hypothesis("hypothesis: r <= g-1 = dim Ext^1(O_q, D(K)), so r independent classes exist",
                      I(r), Relation::Le, I(g - 1)) && ok;
    if (!ok)
        return b.finish();

    const CSType target{r * g - r + 1, 2 * r * g - 2 * r + 3, r * g + 1};
    b.cert().target = target;

    // 0 -> D(K)^r + O(p1+p2) -> E -> O_q -> 0, V the image of the sections
    // of the subsheaf: D(K) has type (g-1, 2g-2, g), O(p1+p2) has (1, 2, 1).
    b.check("rank: r(g-1) + 1", I(r * (g - 1) + 1), Relation::Eq, I(target.n));
    b.check("degree: r(2g-2) + 2 + 1", I(r * (2 * g - 2) + 2 + 1), Relation::Eq, I(target.d));
    b.check("sections: r g + 1", I(r * g + 1), Relation::Eq, I(target.k));
    b.check("d > 2n", I(target.d), Relation::Gt, I(2 * target.n));

    const Rat lower = bound_kmax(g, target.n, target.d);
    const Rat upper(BigInt(target.n) * g, BigInt(g - 1));
    b.check("window: n + (d-n)/g < k", lower, Relation::Lt, I(target.k));
    b.check("window: k < ng/(g-1)", I(target.k), Relation::Lt, upper);
    auto w = nonss_window(g, target.n, target.d);
    b.check("k lies in the non-semistability window", w.has_value() && w->contains(Rat(target.k)),
            Relation::Eq, true);
    return b.finish();
}

}  // namespace cohsys
