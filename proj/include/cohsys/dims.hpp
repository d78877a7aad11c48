#pragma once

// Brill-Noether numbers and the numerical parts of Ext^1 dimensions between
// two coherent systems of types t1 = (n1,d1,k1) and t2 = (n2,d2,k2).

#include <array>

#include "cohsys/core.hpp"

namespace cohsys {

struct ExtCounts {
    BigInt c12;
    BigInt c21;
};

/// n^2(g-1) + 1 - k(k - d + n(g-1)).
BigInt beta(int g, const CSType& t);

/// n1(n2-k2)(g-1) + (k2-n2)d1 + d2 n1 - k1 k2.
BigInt c21(int g, const CSType& t1, const CSType& t2);

/// n2(n1-k1)(g-1) + (k1-n1)d2 + d1 n2 - k1 k2, i.e. c21 with the roles swapped.
BigInt c12(int g, const CSType& t1, const CSType& t2);

ExtCounts ext_counts(int g, const CSType& t1, const CSType& t2);

/// beta(t1+t2) - [beta(t1) + beta(t2) + C12 + C21 - 1]; identically zero.
BigInt beta_additivity_residual(int g, const CSType& t1, const CSType& t2);

/// C12 regrouped as
///   (d1 - n1 + (n1-k1)g) n2  +  k1(n2-k2)  +  d2(k1-n1).
/// The first term is >= 0 under the bound k1 <= n1 + (d1-n1)/g, the second
/// when k2 <= n2, the third is > 0 when k1 > n1 and d2 > 0.
std::array<BigInt, 3> c12_three_term(int g, const CSType& t1, const CSType& t2);

struct Ext1Dim {
    BigInt value;
    /// Set when the result is negative with both corrections zero, which no
    /// actual pair of coherent systems can produce.
    bool inconsistent = false;
};

/// dim Ext^1(t2, t1) = C21 + dim Hom(t2, t1) + dim Ext^2(t2, t1), with the
/// two correction terms supplied by the caller. Throws DomainError for
/// negative corrections.
Ext1Dim ext1_dim(int g, const CSType& t1, const CSType& t2, const BigInt& h0_21, const BigInt& h2_21);

}  // namespace cohsys
