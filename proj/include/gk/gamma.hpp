#pragma once

#include <complex>

namespace gk::numeric {

using Complex = std::complex<double>;

// Gamma on the complex plane (Lanczos, reflection for Re z < 1/2).
// Throws PoleError at non-positive integers.
Complex gamma(Complex z);

// Relative distance |a - b| / max(|a|, |b|, tiny).
double rel_diff(Complex a, Complex b);

}  // namespace gk::numeric
