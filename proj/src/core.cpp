#include "cohsys/core.hpp"

#include <charconv>
#include <vector>

namespace cohsys {

namespace {

BigInt parse_bigint(std::string_view text)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw DomainError("malformed integer: '" + std::string(text) + "'");
    BigInt v = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            throw DomainError("malformed integer: '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
}

std::int64_t parse_int64(std::string_view text)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw DomainError("malformed integer: '" + std::string(text) + "'");
    return v;
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    // this Boost release rejects a negative denominator
    if (den < 0)
        value_ = boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den));
    else
        value_ = boost::multiprecision::cpp_rational(num, den);
}

BigInt Rat::numerator() const { return boost::multiprecision::numerator(value_); }

BigInt Rat::denominator() const { return boost::multiprecision::denominator(value_); }

Rat& Rat::operator/=(const Rat& o)
{
    if (o.sign() == 0)
        throw DomainError("division by zero rational");
    value_ /= o.value_;
    return *this;
}

BigInt Rat::floor() const
{
    BigInt num = numerator(), den = denominator();
    BigInt q = num / den;  // truncates toward zero
    if (num.sign() < 0 && q * den != num)
        q -= 1;
    return q;
}

BigInt Rat::ceil() const
{
    BigInt f = floor();
    return f * denominator() == numerator() ? f : BigInt(f + 1);
}

std::string Rat::to_string() const
{
    return numerator().str() + "/" + denominator().str();
}

Rat Rat::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_bigint(text));
    return Rat(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

CurveClass::CurveClass(int genus, bool hyperelliptic) : genus_(genus), hyperelliptic_(hyperelliptic)
{
    if (genus < 2)
        throw DomainError("genus must be at least 2, got " + std::to_string(genus));
    if (genus == 2 && !hyperelliptic)
        throw DomainError("every curve of genus 2 is hyperelliptic");
}

std::string CSType::to_string() const
{
    return "(" + std::to_string(n) + "," + std::to_string(d) + "," + std::to_string(k) + ")";
}

CSType mk_cstype(std::int64_t n, std::int64_t d, std::int64_t k)
{
    if (n <= 0)
        throw DomainError("rank must be positive, got " + std::to_string(n));
    if (k <= 0)
        throw DomainError("section count must be positive, got " + std::to_string(k));
    return CSType{n, d, k};
}

CSType parse_cstype(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (parts.size() != 3)
        throw DomainError("type must be given as n,d,k: '" + std::string(text) + "'");
    return mk_cstype(parse_int64(parts[0]), parse_int64(parts[1]), parse_int64(parts[2]));
}

std::string_view to_string(Smoothness s)
{
    switch (s) {
    case Smoothness::Yes: return "yes";
    case Smoothness::PossiblyNot: return "possibly-not";
    case Smoothness::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::string_view to_string(GenericShape s)
{
    switch (s) {
    case GenericShape::BundleQuotient: return "bundle-quotient";
    case GenericShape::TorsionQuotient: return "torsion-quotient";
    case GenericShape::Generated: return "generated";
    case GenericShape::SinglePoint: return "single-point";
    case GenericShape::Empty: return "empty";
    }
    return "?";
}

std::string_view to_string(ExceptionalTag::Kind k)
{
    switch (k) {
    case ExceptionalTag::Kind::DualSpanOfCanonical: return "dual-span-of-canonical";
    case ExceptionalTag::Kind::HyperellipticPencilPower: return "hyperelliptic-pencil-power";
    }
    return "?";
}

}  // namespace cohsys
