#pragma once

#include <complex>

namespace qfent {

// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Definite integral constant entering the ln2 term of the critical entropy
// asymptote family; value adopted at printed precision, cross-checked by
// recompute_i3().
inline constexpr double i3_const = 0.0221603;

// Principal-branch log-gamma for Re z > 0 (Lanczos approximation).
// imag(log_gamma(z)) is continuous in z on the right half plane.
std::complex<double> log_gamma(std::complex<double> z);

// log of the Barnes G function at 1+z, i.e. ln G(1+z).
// Product form truncated at n = 1e5 with an Euler-Maclaurin tail estimate;
// absolute accuracy ~1e-12 for |z| <= 2. Requires 1 + Re z > 0.
double log_barnes_g1p(double z);
std::complex<double> log_barnes_g1p(std::complex<double> z);

// Independent evaluation of i3_const from its integral representation
//   I3 = [ (1+euler_gamma)/6 - J2 ] / ln 2,
//   J2 = -2*pi * Integral_0^inf y * arg Gamma(1/2 + i y) * sech(pi y)^2 dy.
double recompute_i3();

}  // namespace qfent
