#include "gk/rational.hpp"

#include <charconv>
#include <sstream>

#include "gk/errors.hpp"

namespace gk {

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    auto first = text.data();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || first == text.data() + text.size())
        throw InputError("not a rational number: '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const ComplexRational& z)
{
    if (z.im == 0) return to_string(z.re);
    std::ostringstream out;
    if (z.re != 0) out << to_string(z.re) << (z.im < 0 ? " - " : " + ");
    else if (z.im < 0) out << "-";
    const Rational mag = z.im < 0 ? -z.im : z.im;
    if (mag != 1) out << to_string(mag);
    out << "i";
    return out.str();
}

std::string to_string(const AffineForm& f, std::string_view var)
{
    std::ostringstream out;
    bool wrote = false;
    if (f.b != 0) {
        out << to_string(f.b);
        wrote = true;
    }
    if (f.a != 0) {
        const bool neg = f.a < 0;
        const Rational mag = neg ? -f.a : f.a;
        if (wrote) out << (neg ? " - " : " + ");
        else if (neg) out << "-";
        if (mag.numerator() != 1) out << mag.numerator();
        out << var;
        if (mag.denominator() != 1) out << "/" << mag.denominator();
        wrote = true;
    }
    if (!wrote) out << "0";
    return out.str();
}

}  // namespace gk
