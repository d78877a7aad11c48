#pragma once

// Shared domain types: exact integers and rationals, curve data, coherent
// system types and the classification record.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cohsys {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an input lies outside the domain an operation is defined on.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    Rat(const BigInt& num, const BigInt& den);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    /// Largest integer not exceeding the value.
    BigInt floor() const;
    /// Smallest integer not below the value.
    BigInt ceil() const;

    /// "p/q" with q > 0 and gcd(p, q) = 1; integers render as "p/1".
    std::string to_string() const;
    /// Accepts "p/q" or a bare integer "p".
    static Rat parse(std::string_view text);

    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    boost::multiprecision::cpp_rational value_;
};

/// The ambient curve: genus g >= 2 and whether it is hyperelliptic.
class CurveClass {
public:
    /// Throws DomainError for g < 2 or for a non-hyperelliptic genus-2 curve.
    CurveClass(int genus, bool hyperelliptic);

    int genus() const { return genus_; }
    bool hyperelliptic() const { return hyperelliptic_; }

    friend bool operator==(const CurveClass&, const CurveClass&) = default;

private:
    int genus_;
    bool hyperelliptic_;
};

/// Numerical type (n, d, k) of a coherent system: rank, degree and
/// dimension of the section space. Degree is unrestricted here.
struct CSType {
    std::int64_t n = 1;
    std::int64_t d = 0;
    std::int64_t k = 1;

    friend bool operator==(const CSType&, const CSType&) = default;
    friend auto operator<=>(const CSType&, const CSType&) = default;

    /// Componentwise sum; used for extensions 0 -> t1 -> t -> t2 -> 0.
    friend CSType operator+(const CSType& a, const CSType& b)
    {
        return CSType{a.n + b.n, a.d + b.d, a.k + b.k};
    }

    std::string to_string() const;
};

/// Validated construction; rejects n <= 0 or k <= 0.
CSType mk_cstype(std::int64_t n, std::int64_t d, std::int64_t k);

/// Parses "n,d,k".
CSType parse_cstype(std::string_view text);

enum class Smoothness { Yes, PossiblyNot, NotApplicable };

enum class GenericShape { BundleQuotient, TorsionQuotient, Generated, SinglePoint, Empty };

/// The two families of objects that escape the bound k <= n + (d-n)/g at d = 2n.
struct ExceptionalTag {
    enum class Kind { DualSpanOfCanonical, HyperellipticPencilPower };

    Kind kind;
    CSType type;
    /// Exponent a of L^a for the hyperelliptic family; 0 for the canonical one.
    int a = 0;

    friend bool operator==(const ExceptionalTag&, const ExceptionalTag&) = default;
};

/// Classification record for a (curve, type) pair.
struct Verdict {
    CurveClass curve{2, true};
    CSType type;

    bool u_nonempty = false;
    bool us_nonempty = false;
    bool b_nonempty = false;
    /// Uniform over every admissible alpha.
    bool g_alpha_nonempty = false;
    std::optional<BigInt> dim;
    BigInt beta;
    std::optional<bool> irreducible;
    Smoothness smooth_GL = Smoothness::NotApplicable;
    GenericShape generic_shape = GenericShape::Empty;
    std::optional<ExceptionalTag> exceptional;
};

std::string_view to_string(Smoothness s);
std::string_view to_string(GenericShape s);
std::string_view to_string(ExceptionalTag::Kind k);

}  // namespace cohsys
