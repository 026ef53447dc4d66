#include "qfent/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "qfent/quadrature.hpp"

namespace qfent {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Four real integrands evaluated together so each adaptive pass shares the
// symbol evaluations.
struct Quad4 {
  double v[4] = {0, 0, 0, 0};
  Quad4& operator+=(const Quad4& o) {
    for (int i = 0; i < 4; ++i) v[i] += o.v[i];
    return *this;
  }
  Quad4& operator*=(double s) {
    for (int i = 0; i < 4; ++i) v[i] *= s;
    return *this;
  }
  friend Quad4 operator+(Quad4 a, const Quad4& b) { return a += b; }
  friend Quad4 operator-(Quad4 a, const Quad4& b) {
    for (int i = 0; i < 4; ++i) a.v[i] -= b.v[i];
    return a;
  }
  friend Quad4 operator*(double s, Quad4 a) { return a *= s; }
};

double err_norm(const Quad4& q) {
  double m = 0;
  for (double x : q.v) m = std::max(m, std::abs(x));
  return m;
}

// Bounded ratios f/sqrt(delta); each numerator satisfies f^2 <= delta, and
// whenever delta -> 0 away from a dispersion zero the prefactor p_step is 0.
struct Ratios {
  double as, bs, ba;  // P * {A^s, B^s, B^a} / sqrt(delta)
  double m;           // M
};

Ratios ratios_at(const ModelSpec& m, double theta) {
  const SymbolSample s = eval_components(m, theta);
  const double rd = std::sqrt(s.delta);
  Ratios r{0, 0, 0, s.m_step};
  if (rd > 0 && s.p_step != 0) {
    r.as = s.p_step * s.a_s / rd;
    r.bs = s.p_step * s.b_s / rd;
    r.ba = s.p_step * s.b_a / rd;
  }
  return r;
}

}  // namespace

double occupation_symbol(const ModelSpec& m, double theta) {
  const Ratios r = ratios_at(m, theta);
  return 0.5 * (1.0 - r.m - r.as);
}

cxd pairing_symbol(const ModelSpec& m, double theta) {
  const SymbolSample s = eval_components(m, theta);
  const double rd = std::sqrt(s.delta);
  if (rd == 0 || s.p_step == 0) return 0;
  return -s.p_step * m.b_sym(theta) / rd;
}

CorrelationEngine::CorrelationEngine(ModelSpec m, double tol)
    : model_(std::move(m)), tol_(tol) {
  model_.validate();
  phase_ = classify(model_);
  if (phase_.flat_band)
    throw DegeneracyError("flat band: block entropy undefined");
  for (double z : phase_.dispersion_zeros) {
    const double a = std::abs(z);
    if (a > 1e-12 && a < kPi - 1e-12) breaks_.push_back(a);
  }
  std::sort(breaks_.begin(), breaks_.end());
  breaks_.erase(std::unique(breaks_.begin(), breaks_.end(),
                            [](double x, double y) { return y - x < 1e-12; }),
                breaks_.end());
}

CorrelationEngine::Entry CorrelationEngine::compute(long d) const {
  const auto f = [&](double t) {
    const Ratios r = ratios_at(model_, t);
    const double sd = std::sin(d * t), cd = std::cos(d * t);
    Quad4 q;
    q.v[0] = sd * (r.m - r.bs);
    q.v[1] = sd * r.ba - cd * r.as;
    q.v[2] = sd * r.ba + cd * r.as;
    q.v[3] = sd * (r.m + r.bs);
    return q;
  };
  const Quad4 q = integrate_split(f, 0.0, kPi, breaks_, tol_);
  return {q.v[0] / kPi, q.v[1] / kPi, q.v[2] / kPi, q.v[3] / kPi};
}

CorrelationEngine::Entry CorrelationEngine::entry(long d) const {
  {
    std::shared_lock lk(mu_);
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
  }
  Entry e = compute(d);
  std::unique_lock lk(mu_);
  return cache_.emplace(d, e).first->second;
}

Eigen::Matrix2d CorrelationEngine::pi_block(long d) const {
  Eigen::Matrix2d b;
  if (d >= 0) {
    const Entry e = entry(d);
    b << e.c11, e.c12, e.c21, e.c22;
  } else {
    const Entry e = entry(-d);
    b << -e.c11, -e.c21, -e.c12, -e.c22;  // C(-d) = -C(d)^T
  }
  return b;
}

Eigen::MatrixXd CorrelationEngine::correlation_matrix(int L) const {
  if (L < 1) throw ModelError("block length must be >= 1");
  Eigen::MatrixXd c(2 * L, 2 * L);
  for (int d = 0; d < L; ++d) {
    const Eigen::Matrix2d blk = pi_block(d);
    const Eigen::Matrix2d neg = -blk.transpose();
    for (int l = 0; l + d < L; ++l) {
      c.block<2, 2>(2 * (l + d), 2 * l) = blk;       // j - l = d
      if (d > 0) c.block<2, 2>(2 * l, 2 * (l + d)) = neg;
    }
  }
  return c;
}

cxd CorrelationEngine::bdag_b(long d) const {
  std::vector<double> pm;
  for (double b : breaks_) {
    pm.push_back(-b);
    pm.push_back(b);
  }
  std::sort(pm.begin(), pm.end());
  const auto f = [&](double t) {
    return std::exp(cxd(0, -t * d)) * occupation_symbol(model_, t);
  };
  return integrate_split(f, -kPi, kPi, pm, tol_) / (2 * kPi);
}

cxd CorrelationEngine::b_b(long d) const {
  std::vector<double> pm;
  for (double b : breaks_) {
    pm.push_back(-b);
    pm.push_back(b);
  }
  std::sort(pm.begin(), pm.end());
  const auto f = [&](double t) {
    return std::exp(cxd(0, t * d)) * pairing_symbol(model_, t);
  };
  return integrate_split(f, -kPi, kPi, pm, tol_) / (2 * kPi);
}

RingCorrelations::RingCorrelations(ModelSpec m, int N)
    : model_(std::move(m)), n_(N) {
  model_.validate();
  if (N < 2) throw ModelError("ring needs at least 2 sites");
  g_.assign(N, 0);
  f_.assign(N, 0);
  // Degeneracy scan first so a zero mode is reported before any division.
  double scale = 0;
  std::vector<SymbolSample> samples(N);
  for (int k = 0; k < N; ++k) {
    samples[k] = eval_components(model_, 2 * kPi * k / N);
    scale = std::max(scale, std::abs(samples[k].lambda));
  }
  for (int k = 0; k < N; ++k)
    if (std::abs(samples[k].lambda) <= 1e-12 * std::max(1.0, scale))
      throw DegeneracyError("zero-energy ring mode at momentum index " +
                            std::to_string(k));
  for (int k = 0; k < N; ++k) {
    const double theta = 2 * kPi * k / N;
    const double rho = occupation_symbol(model_, theta);
    const cxd pf = pairing_symbol(model_, theta);
    for (int d = 0; d < N; ++d) {
      g_[d] += std::exp(cxd(0, -theta * d)) * rho;
      f_[d] += std::exp(cxd(0, theta * d)) * pf;
    }
  }
  for (int d = 0; d < N; ++d) {
    g_[d] /= N;
    f_[d] /= N;
  }
}

cxd RingCorrelations::bdag_b(long d) const {
  long r = d % n_;
  if (r < 0) r += n_;
  return g_[r];
}

cxd RingCorrelations::b_b(long d) const {
  long r = d % n_;
  if (r < 0) r += n_;
  return f_[r];
}

Eigen::Matrix2d RingCorrelations::pi_block(long d) const {
  const cxd g = bdag_b(d), f = b_b(d);
  const double delta = (d % n_ == 0) ? 1.0 : 0.0;
  Eigen::Matrix2d b;
  b(0, 0) = 2 * (g.imag() + f.imag());
  b(1, 1) = 2 * (g.imag() - f.imag());
  b(0, 1) = -delta + 2 * (g.real() + f.real());
  b(1, 0) = delta - 2 * (g.real() - f.real());
  return b;
}

Eigen::MatrixXd RingCorrelations::correlation_matrix(int L) const {
  if (L < 1 || L > n_) throw ModelError("block length out of range");
  Eigen::MatrixXd c(2 * L, 2 * L);
  for (int j = 0; j < L; ++j)
    for (int l = 0; l < L; ++l)
      c.block<2, 2>(2 * j, 2 * l) = pi_block(j - l);
  return c;
}

double GaugeArcs::filling() const {
  double s = 0;
  for (const auto& [a, b] : arcs) s += b - a;
  return s / (2 * kPi);
}

GaugeArcs gauge_occupied_arcs(const ModelSpec& m) {
  if (!m.gauge_invariant(1e-14))
    throw ModelError("model has pairing terms; no gauge kernel");
  const int n = std::max(1024, 64 * m.range());
  std::vector<double> grid(n + 1), val(n + 1);
  for (int i = 0; i <= n; ++i) {
    grid[i] = -kPi + 2 * kPi * i / n;
    val[i] = m.a_sym(grid[i]);
  }
  std::vector<double> cross;
  for (int i = 0; i < n; ++i) {
    if ((val[i] < 0) == (val[i + 1] < 0)) continue;
    double lo = grid[i], hi = grid[i + 1];
    double flo = val[i];
    while (hi - lo > 1e-14) {
      const double mid = 0.5 * (lo + hi), fm = m.a_sym(mid);
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    cross.push_back(0.5 * (lo + hi));
  }
  GaugeArcs out;
  if (cross.empty()) {
    const auto [mn, mx] = std::minmax_element(val.begin(), val.end());
    if (*mn < -*mx) out.arcs.emplace_back(-kPi, kPi);
    return out;
  }
  std::vector<double> edges{-kPi};
  edges.insert(edges.end(), cross.begin(), cross.end());
  edges.push_back(kPi);
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    // A region wrapping through ±pi shows up as two arcs; every consumer
    // only ever sums over arcs, so no stitching is needed.
    const double mid = 0.5 * (edges[i] + edges[i + 1]);
    if (m.a_sym(mid) < 0) out.arcs.emplace_back(edges[i], edges[i + 1]);
  }
  return out;
}

cxd gauge_kernel_coeff(const GaugeArcs& arcs, long d) {
  if (d == 0) return arcs.filling();
  cxd s = 0;
  for (const auto& [a, b] : arcs.arcs)
    s += std::exp(cxd(0, d * b)) - std::exp(cxd(0, d * a));
  return s / cxd(0, 2 * kPi * d);
}

Eigen::MatrixXcd gauge_kernel(const ModelSpec& m, int L) {
  const GaugeArcs arcs = gauge_occupied_arcs(m);
  std::vector<cxd> coeff(L);
  for (int d = 0; d < L; ++d) coeff[d] = gauge_kernel_coeff(arcs, d);
  Eigen::MatrixXcd k(L, L);
  for (int j = 0; j < L; ++j)
    for (int l = 0; l < L; ++l)
      k(j, l) = (j >= l) ? coeff[j - l] : std::conj(coeff[l - j]);
  return k;
}

}  // namespace qfent
