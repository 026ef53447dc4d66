#include "qfent/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qfent/quadrature.hpp"

namespace qfent {

namespace {

constexpr double kLanczosCoeff[6] = {
    76.18009172947146,     -86.50532032941677,   24.01409824083091,
    -1.231739572450155,    0.1208650973866179e-2, -0.5395239384953e-5};

constexpr int kBarnesTerms = 100000;

// Sum over n >= m of n^{-j}, j >= 2, by Euler-Maclaurin with the first
// summand included at n = m.
double zeta_tail(int j, double m) {
  const double mj = std::pow(m, -static_cast<double>(j));
  return m * mj / (j - 1) + 0.5 * mj + (j / 12.0) * mj / m;
}

template <class T>
T barnes_series(T z) {
  const T z2 = z * z;
  const T z3 = z2 * z;
  // Kahan-compensated sum of term_n = n*log(1+z/n) - z + z^2/(2n).
  T sum{};
  T carry{};
  const auto add = [&](T term) {
    const T y = term - carry;
    const T t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  };
  // Beyond kDirect the log form loses absolute accuracy to cancellation, so
  // term_n is evaluated via its expansion sum_{k>=3} (-1)^{k+1} z^k/(k n^{k-1}).
  constexpr int kDirect = 40;
  for (int n = 1; n < kDirect; ++n) {
    const double dn = n;
    add(dn * std::log(1.0 + z / dn) - z + z2 / (2.0 * dn));
  }
  for (int n = kDirect; n <= kBarnesTerms; ++n) {
    const double inv_n = 1.0 / n;
    T zk = z3 * inv_n;
    double sign = 1.0;
    T term{};
    for (int k = 3; k <= 40; ++k) {
      const T inc = sign * zk / static_cast<double>(k);
      term += inc;
      if (std::abs(inc) < 1e-20 * (std::abs(term) + 1e-30)) break;
      zk *= z * inv_n;
      sign = -sign;
    }
    term *= inv_n;
    add(term);
  }
  // Tail: sum over n > kBarnesTerms of sum_{k>=3} (-1)^{k+1} z^k / (k n^{k-1}).
  const double m = kBarnesTerms + 1;
  T zk = z2 * z;
  double sign = 1.0;
  T tail{};
  for (int k = 3; k <= 14; ++k) {
    tail += sign * (zk / static_cast<double>(k)) * zeta_tail(k - 1, m);
    zk *= z;
    sign = -sign;
  }
  return sum + tail;
}

template <class T>
T barnes_impl(T z) {
  constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
  return 0.5 * kLog2Pi * z - 0.5 * z * (z + 1.0) -
         0.5 * euler_gamma * (z * z) + barnes_series(z);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (z.real() <= 0.0)
    throw std::domain_error("log_gamma requires Re z > 0");
  std::complex<double> series(1.000000000190015, 0.0);
  for (int i = 0; i < 6; ++i) series += kLanczosCoeff[i] / (z + static_cast<double>(i + 1));
  const std::complex<double> base = z + 5.5;
  return (z + 0.5) * std::log(base) - base +
         std::log(2.5066282746310005 * series / z);
}

double log_barnes_g1p(double z) {
  if (1.0 + z <= 0.0)
    throw std::domain_error("log_barnes_g1p requires 1 + z > 0");
  return barnes_impl(z);
}

std::complex<double> log_barnes_g1p(std::complex<double> z) {
  if (1.0 + z.real() <= 0.0)
    throw std::domain_error("log_barnes_g1p requires 1 + Re z > 0");
  return barnes_impl(z);
}

double recompute_i3() {
  const auto integrand = [](double y) {
    const double arg_gamma = log_gamma({0.5, y}).imag();
    const double sech = 1.0 / std::cosh(M_PI * y);
    return y * arg_gamma * sech * sech;
  };
  const double j2 = -2.0 * M_PI * integrate(integrand, 0.0, 8.0, 1e-13);
  return ((1.0 + euler_gamma) / 6.0 - j2) / std::numbers::ln2;
}

}  // namespace qfent
