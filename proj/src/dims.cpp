#include "cohsys/dims.hpp"

namespace cohsys {

namespace {

void require_genus(int g)
{
    if (g < 2)
        throw DomainError("genus must be at least 2, got " + std::to_string(g));
}

}  // namespace

BigInt beta(int g, const CSType& t)
{
    require_genus(g);
    BigInt n = t.n, d = t.d, k = t.k, gm1 = g - 1;
    return n * n * gm1 + 1 - k * (k - d + n * gm1);
}

BigInt c21(int g, const CSType& t1, const CSType& t2)
{
    require_genus(g);
    BigInt n1 = t1.n, d1 = t1.d, k1 = t1.k;
    BigInt n2 = t2.n, d2 = t2.d, k2 = t2.k;
    return n1 * (n2 - k2) * (g - 1) + (k2 - n2) * d1 + d2 * n1 - k1 * k2;
}

BigInt c12(int g, const CSType& t1, const CSType& t2)
{
    require_genus(g);
    BigInt n1 = t1.n, d1 = t1.d, k1 = t1.k;
    BigInt n2 = t2.n, d2 = t2.d, k2 = t2.k;
    return n2 * (n1 - k1) * (g - 1) + (k1 - n1) * d2 + d1 * n2 - k1 * k2;
}

ExtCounts ext_counts(int g, const CSType& t1, const CSType& t2)
{
    return ExtCounts{c12(g, t1, t2), c21(g, t1, t2)};
}

BigInt beta_additivity_residual(int g, const CSType& t1, const CSType& t2)
{
    return beta(g, t1 + t2) - (beta(g, t1) + beta(g, t2) + c12(g, t1, t2) + c21(g, t1, t2) - 1);
}

std::array<BigInt, 3> c12_three_term(int g, const CSType& t1, const CSType& t2)
{
    require_genus(g);
    BigInt n1 = t1.n, d1 = t1.d, k1 = t1.k;
    BigInt n2 = t2.n, d2 = t2.d, k2 = t2.k;
    return {(d1 - n1 + (n1 - k1) * g) * n2, k1 * (n2 - k2), d2 * (k1 - n1)};
}

Ext1Dim ext1_dim(int g, const CSType& t1, const CSType& t2, const BigInt& h0_21, const BigInt& h2_21)
{
    if (h0_21 < 0 || h2_21 < 0)
        throw DomainError("hom and ext^2 dimensions must be non-negative");
    Ext1Dim r;
    r.value = c21(g, t1, t2) + h0_21 + h2_21;
    r.inconsistent = r.value < 0 && h0_21 == 0 && h2_21 == 0;
    return r;
}

}  // namespace cohsys
