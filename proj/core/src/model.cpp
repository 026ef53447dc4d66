#include "qfent/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qfent {

namespace {

constexpr double kPi = std::numbers::pi;

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Wrap to [-pi, pi).
double wrap_angle(double t) {
  t = std::fmod(t + kPi, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  return t - kPi;
}

}  // namespace

void ModelSpec::validate() const {
  if (hop.empty()) throw ModelError("model: range must be >= 1 (hop empty)");
  if (pair.size() > hop.size())
    throw ModelError("model: pair range exceeds hop range");
  if (std::abs(hop[0].imag()) != 0.0)
    throw ModelError("model: hop[0] must be real (A hermitian)");
  if (!pair.empty() && std::abs(pair[0]) != 0.0)
    throw ModelError("model: pair[0] must be zero (B antisymmetric)");
}

bool ModelSpec::gauge_invariant(double tol) const {
  for (const auto& p : pair)
    if (std::abs(p) > tol) return false;
  return true;
}

bool ModelSpec::real_coefficients(double tol) const {
  for (const auto& a : hop)
    if (std::abs(a.imag()) > tol) return false;
  for (const auto& p : pair)
    if (std::abs(p.imag()) > tol) return false;
  return true;
}

cxd ModelSpec::a_coeff(int d) const {
  int n = std::abs(d);
  if (n >= range()) return 0.0;
  return d >= 0 ? hop[n] : std::conj(hop[n]);
}

cxd ModelSpec::b_coeff(int d) const {
  int n = std::abs(d);
  if (n == 0 || n >= static_cast<int>(pair.size())) return 0.0;
  return d > 0 ? pair[n] : -pair[n];
}

double ModelSpec::a_sym(double theta) const {
  // A(t) = hop[0] + 2 sum_{n>=1} Re(e^{-int} hop[n])
  double v = hop[0].real();
  for (int n = 1; n < range(); ++n) {
    v += 2.0 * (hop[n].real() * std::cos(n * theta) +
                hop[n].imag() * std::sin(n * theta));
  }
  return v;
}

cxd ModelSpec::b_sym(double theta) const {
  // B(t) = -2i sum_{n>=1} pair[n] sin(nt)
  cxd v = 0.0;
  for (int n = 1; n < static_cast<int>(pair.size()); ++n)
    v += pair[n] * std::sin(n * theta);
  return cxd(0.0, -2.0) * v;
}

ModelSpec ModelSpec::scaled(double s) const {
  ModelSpec out = *this;
  for (auto& a : out.hop) a *= s;
  for (auto& p : out.pair) p *= s;
  return out;
}

ModelSpec ModelSpec::particle_hole_flipped() const {
  // b -> b^dag maps A -> -A^T (i.e. a_d -> -conj(a_d)) and B -> -B^dag
  // (b_d -> -conj(b_d)) up to a constant shift.
  ModelSpec out = *this;
  for (auto& a : out.hop) a = -std::conj(a);
  for (auto& p : out.pair) p = -std::conj(p);
  return out;
}

SymbolSample eval_components(const ModelSpec& m, double theta) {
  SymbolSample s{};
  s.theta = theta;
  const double ap = m.a_sym(theta);
  const double am = m.a_sym(-theta);
  const cxd b = m.b_sym(theta);
  s.a_s = ap + am;
  s.a_a = am - ap;
  s.b_s = 2.0 * b.real();
  s.b_a = 2.0 * b.imag();
  s.delta = s.a_s * s.a_s + s.b_s * s.b_s + s.b_a * s.b_a;
  s.lambda = 0.5 * (s.a_a + std::sqrt(s.delta));
  const double lm = 0.5 * ((ap - am) + std::sqrt(s.delta));  // lambda(-theta)
  s.m_step = 0.5 * (sgn(s.lambda) - sgn(lm));
  s.p_step = 0.5 * (sgn(s.lambda) + sgn(lm));
  return s;
}

namespace {

double lambda_of(const ModelSpec& m, double t) {
  return eval_components(m, t).lambda;
}

// Bisection for a sign change of lambda in [a,b]; lambda(a), lambda(b) have
// opposite (nonzero) signs.
double bisect_zero(const ModelSpec& m, double a, double b, double fa) {
  for (int it = 0; it < 200 && (b - a) > 1e-10; ++it) {
    double c = 0.5 * (a + b);
    double fc = lambda_of(m, c);
    if (fc == 0.0) return c;
    if ((fc > 0) == (fa > 0)) {
      a = c;
      fa = fc;
    } else {
      b = c;
    }
  }
  return 0.5 * (a + b);
}

// Golden-section minimisation of lambda on [a,b] to width 1e-10.
std::pair<double, double> golden_min(const ModelSpec& m, double a, double b) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = lambda_of(m, c), fd = lambda_of(m, d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = lambda_of(m, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = lambda_of(m, d);
    }
  }
  double mid = 0.5 * (a + b);
  return {mid, lambda_of(m, mid)};
}

}  // namespace

PhasePoint classify(const ModelSpec& m, int grid_size) {
  m.validate();
  const int min_grid = 4 * (2 * m.range() + 1);
  int n = std::max(grid_size, std::max(min_grid, 256));

  std::vector<double> grid(n), lam(n);
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    grid[i] = -kPi + (2.0 * kPi * i) / n;
    lam[i] = lambda_of(m, grid[i]);
    scale = std::max(scale, std::abs(lam[i]));
  }
  for (int i = 0; i < n; ++i) {
    const SymbolSample s = eval_components(m, grid[i]);
    scale = std::max(scale, std::sqrt(s.delta));
  }
  if (scale == 0.0) scale = 1.0;
  const double ztol = 1e-12 * scale;

  PhasePoint out;

  // Flat band: lambda ~ 0 on consecutive grid points.
  int flat_run = 0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(lam[i]) < ztol) {
      if (++flat_run >= 3) out.flat_band = true;
    } else {
      flat_run = 0;
    }
  }

  std::vector<double> zeros;
  bool any_missed_negative = false;
  auto push_zero = [&](double t) {
    t = wrap_angle(t);
    for (double z : zeros)
      if (std::abs(wrap_angle(z - t)) < 1e-8) return;
    zeros.push_back(t);
  };

  // Sign changes between neighbouring grid points (periodic wrap).
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const double a = grid[i], b = grid[i] + 2.0 * kPi / n;
    const double fa = lam[i], fb = lam[j];
    if (std::abs(fa) < ztol) {
      push_zero(a);
      continue;
    }
    if (std::abs(fb) < ztol) continue;  // handled at its own index
    if ((fa > 0) != (fb > 0)) push_zero(bisect_zero(m, a, b, fa));
  }

  // Touchings: positive local minima refined by golden section.  A minimum
  // that dips below zero means the grid missed a narrow negative window; the
  // two flanking crossings are recovered by bisection.
  for (int i = 0; i < n; ++i) {
    const int ip = (i + n - 1) % n, in = (i + 1) % n;
    if (lam[i] <= lam[ip] && lam[i] <= lam[in] && lam[i] > 0.0) {
      const double a = grid[i] - 2.0 * kPi / n, b = grid[i] + 2.0 * kPi / n;
      auto [t, v] = golden_min(m, a, b);
      if (std::abs(v) < 1e-9 * scale) {
        push_zero(t);
      } else if (v < 0.0) {
        push_zero(bisect_zero(m, a, t, lambda_of(m, a)));
        push_zero(bisect_zero(m, t, b, v));
        any_missed_negative = true;
      }
    }
  }

  std::sort(zeros.begin(), zeros.end());
  out.dispersion_zeros = zeros;

  bool any_negative = any_missed_negative;
  for (int i = 0; i < n; ++i) any_negative |= (lam[i] < -ztol);
  out.critical = !zeros.empty() || any_negative || out.flat_band;

  // Negative intervals: sample between consecutive zeros.
  if (!zeros.empty()) {
    const int nz = static_cast<int>(zeros.size());
    for (int i = 0; i < nz; ++i) {
      double a = zeros[i];
      double b = (i + 1 < nz) ? zeros[i + 1] : zeros[0] + 2.0 * kPi;
      if (b - a < 1e-9) continue;
      double mid = 0.5 * (a + b);
      if (lambda_of(m, wrap_angle(mid)) < -ztol)
        out.negative_region.emplace_back(wrap_angle(a), wrap_angle(a) + (b - a));
    }
  } else if (any_negative) {
    // lambda < 0 everywhere is impossible (lambda(t) + lambda(-t) =
    // sqrt(delta) >= 0), so zeros exist whenever a negative value does;
    // reaching here means the grid missed them.
    out.negative_region.emplace_back(-kPi, kPi);
  }

  // M != 0 on positive measure <=> lambda < 0 somewhere (then lambda(-t) > 0
  // there, since lambda(t) + lambda(-t) = sqrt(delta)).
  out.reflection_breaking = !out.negative_region.empty() || any_negative;
  return out;
}

ModelSpec nn_model(double gamma, double h, double D) {
  ModelSpec m;
  m.hop = {cxd(-2.0 * h, 0.0), cxd(1.0, -D)};
  m.pair = {0.0, cxd(gamma, 0.0)};
  return m;
}

ModelSpec current_model(double J, double h, double lam) {
  ModelSpec m;
  m.hop = {cxd(-2.0 * h, 0.0), cxd(2.0 * J, -2.0 * h), cxd(0.0, -2.0 * lam)};
  m.pair = {};
  return m;
}

NNPoint nn_phase_region(double gamma, double h, double D) {
  if (gamma < 0.0 || gamma > 1.0)
    throw ModelError("nn_phase_region: gamma must lie in [0,1]");
  NNPoint out;
  out.model = nn_model(gamma, h, D);
  out.phase = classify(out.model);
  out.d_prime_sq = D * D + 1.0 - gamma * gamma;

  const bool region_i =
      out.d_prime_sq >= 1.0 - 1e-12 &&
      out.d_prime_sq >= h * h - 1e-12;
  const bool h_line = std::abs(std::abs(h) - 1.0) < 1e-12;
  if (region_i && h_line)
    out.region = "region-i,|h|=1";
  else if (region_i)
    out.region = "region-i";
  else if (h_line)
    out.region = "|h|=1";
  else
    out.region = "non-critical";

  const bool analytic_critical = region_i || h_line;
  if (analytic_critical != out.phase.critical)
    throw ModelError("nn_phase_region: analytic region test disagrees with classify()");
  return out;
}

}  // namespace qfent
