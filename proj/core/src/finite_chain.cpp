#include "qfent/finite_chain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "qfent/correlations.hpp"
#include "qfent/eig.hpp"
#include "qfent/entropy.hpp"
#include "qfent/parallel.hpp"

namespace qfent {

namespace {

struct LinearFit {
  double slope, intercept, rms;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const int n = static_cast<int>(x.size());
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx < 1e-12 * n)
    throw ModelError("fit abscissas are degenerate (rank-deficient window)");
  LinearFit out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = y[i] - out.slope * x[i] - out.intercept;
    ss += r * r;
  }
  out.rms = std::sqrt(ss / n);
  return out;
}

}  // namespace

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> finite_couplings(
    const ModelSpec& m, int sites, Boundary bc) {
  const int range = m.range();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(sites, sites);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(sites, sites);
  for (int j = 0; j < sites; ++j) {
    for (int l = 0; l < sites; ++l) {
      const int base = l - j;
      for (const int d : {base, base + sites, base - sites}) {
        if (std::abs(d) > range) continue;
        if (bc == Boundary::open && d != base) continue;
        a(j, l) += m.a_coeff(d);
        b(j, l) += m.b_coeff(d);
      }
    }
  }
  return {std::move(a), std::move(b)};
}

FiniteChain::FiniteChain(ModelSpec m, int sites, Boundary bc)
    : model_(std::move(m)), n_(sites), bc_(bc) {
  model_.validate();
  const int range = model_.range();
  if (n_ < 2) throw ModelError("chain needs at least two sites");
  if (bc_ == Boundary::periodic && n_ < 2 * range)
    throw ModelError("periodic chain shorter than twice the coupling range");

  const auto [a, b] = finite_couplings(model_, n_, bc_);

  // Work in the majorana basis: H = (i/4) m^T K m + const with K real
  // antisymmetric.  A real Schur decomposition pairs the +e/-e partners of
  // each mode inside one 2x2 block, so the ground-state correlations stay
  // exactly real and antisymmetric even when edge modes are split only at
  // the 1e-11 level (a Hermitian BdG eigensolver mixes such pairs).
  // Per site pair, K_block = 2 Im(V+ P V) with V = (1/2)[[1,-i],[1,i]] and
  // P = [[A_jl, B_jl], [-conj(B_jl), -A_lj]].
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(2 * n_, 2 * n_);
  for (int j = 0; j < n_; ++j) {
    for (int l = 0; l < n_; ++l) {
      const cxd p11 = a(j, l);
      const cxd p12 = b(j, l);
      const cxd p21 = -std::conj(b(j, l));
      const cxd p22 = -a(l, j);
      k(2 * j, 2 * l) = 0.5 * (p11 + p12 + p21 + p22).imag();
      k(2 * j, 2 * l + 1) = 0.5 * (cxd(0, 1) * (-p11 + p12 - p21 + p22)).imag();
      k(2 * j + 1, 2 * l) = 0.5 * (cxd(0, 1) * (p11 + p12 - p21 - p22)).imag();
      k(2 * j + 1, 2 * l + 1) = 0.5 * (p11 - p12 - p21 + p22).imag();
    }
  }

  const RealSchurPair schur = real_schur(std::move(k));
  const Eigen::MatrixXd& t = schur.t;
  const Eigen::MatrixXd& u = schur.u;

  std::vector<int> block_at;
  std::vector<double> omega;
  for (int pos = 0; pos < 2 * n_;) {
    if (pos + 1 >= 2 * n_ || t(pos + 1, pos) == 0.0)
      throw DegeneracyError(
          "zero single-particle energy: ground state is degenerate");
    block_at.push_back(pos);
    omega.push_back(0.5 * (t(pos, pos + 1) - t(pos + 1, pos)));
    pos += 2;
  }
  double scale = 0.0;
  for (double w : omega) scale = std::max(scale, std::abs(w));
  for (double w : omega) {
    if (std::abs(w) < 1e-12 * std::max(1.0, scale))
      throw DegeneracyError("zero single-particle energy " +
                            std::to_string(std::abs(w)) +
                            ": ground state is degenerate");
  }
  defect_ = (t + t.transpose()).cwiseAbs().maxCoeff();
  if (defect_ > 1e-8 * std::max(1.0, scale))
    throw ModelError("ground-state correlations failed the reality check");

  energies_.resize(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i)
    energies_[i] = std::abs(omega[i]);
  std::sort(energies_.begin(), energies_.end());
  double tr_a = 0.0;
  for (int j = 0; j < n_; ++j) tr_a += a(j, j).real();
  double sum_pos = 0.0;
  for (double v : energies_) sum_pos += v;
  ground_energy_ = 0.5 * tr_a - 0.5 * sum_pos;

  // Each mode block contributes [[0, sgn w], [-sgn w, 0]] in the Schur basis.
  Eigen::MatrixXd c_modes = Eigen::MatrixXd::Zero(2 * n_, 2 * n_);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const int pos = block_at[i];
    const double s = omega[i] > 0.0 ? 1.0 : -1.0;
    c_modes(pos, pos + 1) = s;
    c_modes(pos + 1, pos) = -s;
  }
  corr_ = u * c_modes * u.transpose();
  corr_ = 0.5 * (corr_ - corr_.transpose()).eval();
}

double FiniteChain::block_entropy(int block_length) const {
  if (block_length < 1 || block_length > n_ - 1)
    throw ModelError("block length outside [1, N-1]");
  // The global state is pure, so the complement block has the same entropy;
  // diagonalize whichever corner is smaller.
  const int l = std::min(block_length, n_ - block_length);
  Eigen::MatrixXd corner;
  if (block_length <= n_ - block_length) {
    corner = corr_.topLeftCorner(2 * l, 2 * l);
  } else {
    corner = corr_.bottomRightCorner(2 * l, 2 * l);
  }
  return majorana_entropy(corner).value;
}

double FiniteChain::entropy_asymmetry(int block_length) const {
  return block_entropy(block_length) - block_entropy(n_ - block_length);
}

std::vector<ProfileRow> entropy_profile(const FiniteChain& chain, int stride) {
  if (stride < 1) throw ModelError("stride must be positive");
  const int n = chain.sites();
  std::set<int> lengths;
  for (int l = stride; l <= n - 1; l += stride) {
    lengths.insert(l);
    lengths.insert(n - l);
  }
  std::vector<int> order(lengths.begin(), lengths.end());
  std::vector<double> entropy(order.size());
  parallel_for(0, static_cast<int>(order.size()), [&](int i) {
    entropy[i] = chain.block_entropy(order[i]);
  });
  std::map<int, double> by_length;
  for (std::size_t i = 0; i < order.size(); ++i)
    by_length[order[i]] = entropy[i];

  std::vector<ProfileRow> rows;
  for (int l = stride; l <= n - 1; l += stride)
    rows.push_back({l, by_length[l], by_length[l] - by_length[n - l]});
  return rows;
}

CcFit cc_fit(const std::vector<ProfileRow>& rows, int sites, double lo,
             double hi) {
  std::vector<double> x, y;
  for (const ProfileRow& r : rows) {
    const double fraction = static_cast<double>(r.block_length) / sites;
    if (fraction < lo || fraction > hi) continue;
    x.push_back(std::log((2.0 * sites / M_PI) *
                         std::sin(M_PI * r.block_length / sites)));
    y.push_back(r.entropy);
  }
  if (x.size() < 10)
    throw ModelError("fit window holds fewer than 10 points");
  const LinearFit fit = fit_line(x, y);
  return {6.0 * fit.slope, fit.intercept, fit.rms};
}

Saturation saturation_scan(const ModelSpec& m, double tol, int max_block) {
  CorrelationEngine engine(m);
  if (engine.phase().critical)
    throw ModelError("critical model: block entropy does not saturate");

  Saturation out{};
  double prev = -1.0;
  bool converged = false;
  for (int l = 10; l <= max_block; l += 10) {
    const double s = block_entropy(engine, l);
    if (prev >= 0.0 && std::abs(s - prev) < tol) {
      out.entropy = s;
      out.block_length = l;
      converged = true;
      break;
    }
    prev = s;
  }
  if (!converged)
    throw ModelError("entropy failed to saturate by the block-length cap");

  // Correlator magnitudes below 1e-10 sit at the quadrature noise floor;
  // fitting their logs would corrupt the decay rate.
  const auto collect = [&](int n_max) {
    std::vector<double> ns, logs;
    for (int n = 10; n <= n_max; ++n) {
      const double mag = std::abs(engine.bdag_b(n));
      if (mag < 1e-10) break;
      ns.push_back(n);
      logs.push_back(std::log(mag));
    }
    return std::make_pair(ns, logs);
  };
  // A window short compared to the decay length reads the algebraic prefactor
  // instead of the exponential; keep doubling until the fit settles or the
  // data runs out at the noise floor.
  int n_max = 50;
  auto [ns, logs] = collect(n_max);
  if (ns.size() < 5)
    throw ModelError("correlator decays too fast for a decay-length fit");
  LinearFit fit = fit_line(ns, logs);
  while (fit.rms > 1e-3 && ns.back() >= n_max && n_max < (1 << 20)) {
    n_max *= 2;
    std::tie(ns, logs) = collect(n_max);
    fit = fit_line(ns, logs);
  }
  if (fit.slope >= 0.0)
    throw ModelError("correlator magnitude does not decay");
  out.corr_length = -1.0 / fit.slope;
  return out;
}

double central_charge_estimate(const std::vector<SweepRow>& rows) {
  std::vector<double> x, y;
  for (const SweepRow& r : rows) {
    x.push_back(std::log(r.saturation.corr_length));
    y.push_back(r.saturation.entropy);
  }
  if (x.size() < 3)
    throw ModelError("need at least three sweep rows for a slope estimate");
  return 3.0 * fit_line(x, y).slope;
}

}  // namespace qfent
