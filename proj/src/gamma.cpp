#include "gk/gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "gk/errors.hpp"

namespace gk::numeric {

namespace {

// g = 7, n = 9 coefficients; about 15 significant digits.
constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool on_pole(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && std::nearbyint(z.real()) == z.real();
}

}  // namespace

Complex gamma(Complex z)
{
    if (on_pole(z)) throw PoleError("Gamma has a pole at " + std::to_string(z.real()));
    if (z.imag() == 0.0) return std::tgamma(z.real());
    if (z.real() < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    }
    z -= 1.0;
    Complex x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double rel_diff(Complex a, Complex b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

}  // namespace gk::numeric
