#include "qfent/asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "qfent/special.hpp"

namespace qfent {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_positive(double theta) {
  theta = std::fmod(theta, kTwoPi);
  if (theta <= 0.0) theta += kTwoPi;
  return theta;
}

// Midpoint of the circular arc from a to b going forward (b may be < a).
double arc_midpoint(double a, double b) {
  if (b < a) b += kTwoPi;
  return wrap_positive(0.5 * (a + b));
}

std::vector<std::complex<double>> laurent_circle_roots(
    const std::vector<cxd>& coeff) {
  double scale = 0.0;
  for (const cxd& c : coeff) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw ModelError("dispersion symbol vanishes identically");
  int lo = 0;
  int hi = static_cast<int>(coeff.size()) - 1;
  while (lo < hi && std::abs(coeff[lo]) <= 1e-13 * scale) ++lo;
  while (hi > lo && std::abs(coeff[hi]) <= 1e-13 * scale) --hi;
  const int degree = hi - lo;
  if (degree == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (int i = 0; i + 1 < degree; ++i) companion(i + 1, i) = 1.0;
  for (int i = 0; i < degree; ++i)
    companion(i, degree - 1) = -coeff[lo + i] / coeff[hi];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
  if (solver.info() != Eigen::Success)
    throw ModelError("symbol root finding did not converge");
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < degree; ++i) {
    const std::complex<double> w = solver.eigenvalues()(i);
    if (std::abs(std::abs(w) - 1.0) < 1e-9) roots.push_back(w);
  }
  return roots;
}

void dedup_circular(std::vector<double>& theta, double tol) {
  std::sort(theta.begin(), theta.end());
  std::vector<double> out;
  for (double t : theta) {
    if (out.empty() || t - out.back() > tol) out.push_back(t);
  }
  while (out.size() >= 2 && out.front() + kTwoPi - out.back() <= tol)
    out.erase(out.begin());
  theta = out;
}

double refine_zero(const ModelSpec& m, double guess) {
  for (double delta = 1e-5; delta <= 1.1e-3; delta *= 10.0) {
    double a = guess - delta;
    double b = guess + delta;
    double fa = m.a_sym(a);
    double fb = m.a_sym(b);
    if (fa == 0.0) return wrap_positive(a);
    if (fb == 0.0) return wrap_positive(b);
    if (fa * fb > 0.0) continue;
    for (int it = 0; it < 90; ++it) {
      const double mid = 0.5 * (a + b);
      const double fm = m.a_sym(mid);
      if (fm == 0.0) return wrap_positive(mid);
      if (fa * fm < 0.0) {
        b = mid;
      } else {
        a = mid;
        fa = fm;
      }
    }
    return wrap_positive(0.5 * (a + b));
  }
  throw ModelError(
      "symbol zero without sign change: touching or multiple zero is outside "
      "the simple-jump asymptote family");
}

std::complex<double> log1m_exp(double angle) {
  return std::log(1.0 - std::polar(1.0, angle));
}

}  // namespace

double AsymptoteResult::at(int block_length) const {
  return slope * std::log(static_cast<double>(block_length)) + constant;
}

SymbolZeros find_symbol_zeros(const ModelSpec& m) {
  if (!m.gauge_invariant(1e-14))
    throw ModelError("symbol zeros are defined for gauge-invariant models");
  const int n0 = m.range();
  std::vector<cxd> coeff(2 * n0 + 1);
  for (int k = 0; k <= 2 * n0; ++k) coeff[k] = m.a_coeff(k - n0);

  std::vector<double> candidates;
  for (const std::complex<double>& w : laurent_circle_roots(coeff))
    candidates.push_back(wrap_positive(-std::arg(w)));
  dedup_circular(candidates, 1e-8);

  std::vector<double> theta;
  for (double t : candidates) theta.push_back(refine_zero(m, t));
  dedup_circular(theta, 1e-8);

  SymbolZeros result;
  result.theta = theta;
  if (theta.empty()) {
    result.first_arc_positive = m.a_sym(0.0) > 0.0;
    return result;
  }
  if (theta.size() % 2 != 0)
    throw ModelError("odd number of symbol sign changes detected");

  double coeff_scale = 0.0;
  for (const cxd& c : coeff) coeff_scale += std::abs(c);
  const int R = static_cast<int>(theta.size());
  int prev_sign = 0;
  for (int j = 0; j <= R; ++j) {
    // Arc preceding theta[j % R]; j = 0 is the wrap-around arc.
    const double lo = (j == 0) ? theta[R - 1] - kTwoPi : theta[j - 1];
    const double hi = (j == R) ? theta[0] + kTwoPi : theta[j];
    const double value = m.a_sym(arc_midpoint(lo, hi));
    if (std::abs(value) <= 1e-12 * coeff_scale)
      throw ModelError("symbol does not separate from zero between jumps");
    const int sign = value > 0.0 ? 1 : -1;
    if (j == 0) result.first_arc_positive = sign > 0;
    if (j > 0 && sign == prev_sign)
      throw ModelError("symbol sign fails to alternate across a zero");
    prev_sign = sign;
  }
  return result;
}

AsymptoteResult general_gauge_asymptote(const SymbolZeros& zeros) {
  const int R = static_cast<int>(zeros.theta.size());
  if (R == 0)
    throw ModelError("no dispersion zeros: entropy saturates, no ln L term");
  if (R % 2 != 0) throw ModelError("jump count must be even");
  std::complex<double> same{};
  std::complex<double> cross{};
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < R; ++j) {
      if (i == j) continue;
      const std::complex<double> term =
          log1m_exp(zeros.theta[j] - zeros.theta[i]);
      if ((i - j) % 2 == 0) {
        same += term;
      } else {
        cross += term;
      }
    }
  }
  if (std::abs(same.imag()) > 1e-10 || std::abs(cross.imag()) > 1e-10)
    throw ModelError("jump pair sums failed to collapse to a real value");
  AsymptoteResult out;
  out.slope = R / 6.0;
  out.constant = (R / 6.0) * (1.0 + euler_gamma) -
                 R * std::numbers::ln2 * i3_const - same.real() / 6.0 +
                 cross.real() / 6.0;
  return out;
}

AsymptoteResult keating_mezzadri_asymptote(const SymbolZeros& zeros) {
  const int R = static_cast<int>(zeros.theta.size());
  if (R == 0)
    throw ModelError("no dispersion zeros: entropy saturates, no ln L term");
  std::vector<double> half;
  for (double t : zeros.theta) {
    if (std::abs(t - M_PI) < 1e-8 || t > kTwoPi - 1e-8)
      throw ModelError(
          "zero on the reflection axis: half-circle form inapplicable");
    if (t < M_PI) half.push_back(t);
  }
  if (static_cast<int>(half.size()) * 2 != R)
    throw ModelError("zero set is not reflection symmetric");
  for (double t : half) {
    bool mirrored = false;
    for (double s : zeros.theta) mirrored |= std::abs(s - (kTwoPi - t)) < 1e-8;
    if (!mirrored) throw ModelError("zero set is not reflection symmetric");
  }
  std::sort(half.begin(), half.end());

  double k_sum = 1.0 + euler_gamma;
  for (double t : half) k_sum += (2.0 / R) * std::log(std::abs(1.0 - std::polar(1.0, 2.0 * t)));
  const int half_count = static_cast<int>(half.size());
  for (int r = 1; r <= half_count; ++r) {
    for (int s = 1; s < r; ++s) {
      const double num = std::abs(1.0 - std::polar(1.0, half[r - 1] - half[s - 1]));
      const double den = std::abs(1.0 - std::polar(1.0, half[r - 1] + half[s - 1]));
      const double sign = ((r + s) % 2 == 0) ? 1.0 : -1.0;
      k_sum -= (4.0 / R) * sign * std::log(num / den);
    }
  }
  AsymptoteResult out;
  out.slope = R / 6.0;
  out.constant = (R / 6.0) * k_sum - R * std::numbers::ln2 * i3_const;
  return out;
}

AsymptoteResult ising_dm_entropy(double D) {
  const double c_is =
      (1.0 + euler_gamma + (2.0 - 6.0 * i3_const) * std::numbers::ln2) / 6.0;
  const double c_isdm =
      (1.0 + euler_gamma + (1.0 - 6.0 * i3_const) * std::numbers::ln2) / 3.0;

  SymbolZeros dual;
  AsymptoteResult closed;
  if (std::abs(D) <= 1.0) {
    closed.slope = 1.0 / 6.0;
    closed.constant = c_is;
    if (std::abs(D) > 1.0 - 1e-6) return closed;  // dual zero degenerates
    dual.theta = {M_PI, kTwoPi};
  } else {
    const double phi = std::acos(1.0 / D);
    closed.slope = 1.0 / 3.0;
    closed.constant = std::log(1.0 - 1.0 / (D * D)) / 12.0 + c_isdm;
    dual.theta = {phi, M_PI, kTwoPi - phi, kTwoPi};
    std::sort(dual.theta.begin(), dual.theta.end());
  }
  // The entropy equals half that of the doubled-length reduced description.
  const AsymptoteResult doubled = general_gauge_asymptote(dual);
  AsymptoteResult halved;
  halved.slope = 0.5 * doubled.slope;
  halved.constant =
      0.5 * (doubled.slope * std::numbers::ln2 + doubled.constant);
  if (std::abs(halved.slope - closed.slope) > 1e-12 ||
      std::abs(halved.constant - closed.constant) > 1e-9)
    throw ModelError("halved dual asymptote disagrees with the closed form");
  return closed;
}

std::complex<double> fh_determinant(const ModelSpec& m,
                                    std::complex<double> lambda, int L) {
  if (L < 1) throw ModelError("block length must be positive");
  const SymbolZeros zeros = find_symbol_zeros(m);
  const int R = static_cast<int>(zeros.theta.size());
  // Occupation-kernel symbol of 2K - I: g(theta) = -sign A(-theta).
  const auto g_value = [&](double theta) {
    return m.a_sym(-theta) < 0.0 ? 1.0 : -1.0;
  };
  if (R == 0) {
    return std::pow(lambda - g_value(0.0), L);
  }
  std::vector<double> psi;
  for (double t : zeros.theta) psi.push_back(wrap_positive(kTwoPi - t));
  std::sort(psi.begin(), psi.end());

  std::vector<double> mids(R);
  std::vector<std::complex<double>> arc_p(R);
  for (int j = 0; j < R; ++j) {
    mids[j] = arc_midpoint(psi[j], psi[(j + 1) % R]);
    arc_p[j] = lambda - g_value(mids[j]);
    if (std::abs(arc_p[j]) < 1e-12)
      throw ModelError("lambda coincides with a symbol step value");
  }
  const std::complex<double> itwopi(0.0, kTwoPi);
  std::vector<std::complex<double>> beta(R);
  for (int j = 0; j < R; ++j) {
    const std::complex<double> left = arc_p[(j + R - 1) % R];
    beta[j] = std::log(left / arc_p[j]) / itwopi;
  }

  // Smooth factor: divide out the canonical jump functions at arc midpoints.
  const std::complex<double> iunit(0.0, 1.0);
  const auto jump_product = [&](double theta) {
    std::complex<double> prod = 1.0;
    for (int j = 0; j < R; ++j) {
      double delta = std::fmod(theta - psi[j], kTwoPi);
      if (delta < 0.0) delta += kTwoPi;
      prod *= std::exp(-iunit * beta[j] * (M_PI - delta));
    }
    return prod;
  };
  std::complex<double> psi_factor{};
  for (int j = 0; j < R; ++j) {
    const std::complex<double> sample = arc_p[j] / jump_product(mids[j]);
    if (j > 0 && std::abs(sample - psi_factor / static_cast<double>(j)) >
                     1e-8 * std::abs(sample))
      throw ModelError("piecewise-constant factorization is inconsistent");
    psi_factor += sample;
  }
  psi_factor /= static_cast<double>(R);

  std::complex<double> log_det = static_cast<double>(L) * std::log(psi_factor);
  std::complex<double> beta_sq{};
  for (int j = 0; j < R; ++j) beta_sq += beta[j] * beta[j];
  log_det -= beta_sq * std::log(static_cast<double>(L));
  for (int j = 0; j < R; ++j)
    log_det += log_barnes_g1p(beta[j]) + log_barnes_g1p(-beta[j]);
  for (int j = 0; j < R; ++j) {
    for (int k = 0; k < R; ++k) {
      if (j == k) continue;
      log_det += beta[j] * beta[k] * log1m_exp(psi[k] - psi[j]);
    }
  }
  return std::exp(log_det);
}

}  // namespace qfent
