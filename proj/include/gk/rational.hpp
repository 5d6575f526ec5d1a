#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost's templated integer == rational
// forwards to itself. Exact non-template overloads win overload resolution.
namespace boost {
inline bool operator==(std::int64_t a, const rational<std::int64_t>& b)
{
    return b.denominator() == 1 && b.numerator() == a;
}
inline bool operator==(int a, const rational<std::int64_t>& b)
{
    return operator==(static_cast<std::int64_t>(a), b);
}
}  // namespace boost

namespace gk {

using Rational = boost::rational<std::int64_t>;
using RationalVec = std::vector<Rational>;
using IntVec = std::vector<int>;

std::string to_string(const Rational& r);

// Accepts "p", "p/q", "-p/q" and decimal-free integers; throws InputError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

inline std::strong_ordering compare(const Rational& a, const Rational& b)
{
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Exact complex number with rational real and imaginary parts.
struct ComplexRational {
    Rational re{0};
    Rational im{0};

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
    friend std::strong_ordering operator<=>(const ComplexRational& a, const ComplexRational& b)
    {
        if (auto c = compare(a.re, b.re); c != 0) return c;
        return compare(a.im, b.im);
    }
    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const Rational& k, const ComplexRational& a)
    {
        return {k * a.re, k * a.im};
    }
};

using ComplexRationalVec = std::vector<ComplexRational>;

std::string to_string(const ComplexRational& z);

// Affine form a*s + b in the formal variable s.
struct AffineForm {
    Rational a{0};
    Rational b{0};

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
    friend std::strong_ordering operator<=>(const AffineForm& x, const AffineForm& y)
    {
        if (auto c = compare(x.a, y.a); c != 0) return c;
        return compare(x.b, y.b);
    }
    friend AffineForm operator+(const AffineForm& x, const AffineForm& y) { return {x.a + y.a, x.b + y.b}; }
    friend AffineForm operator*(const Rational& k, const AffineForm& x) { return {k * x.a, k * x.b}; }
    AffineForm operator/(const Rational& k) const { return {a / k, b / k}; }
};

// Renders as "2s + 1/3", "s/2", "1 + s", with the variable name given.
std::string to_string(const AffineForm& f, std::string_view var = "s");

}  // namespace gk
