#include "qfent/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <utility>

#include "qfent/eig.hpp"

namespace qfent {

namespace {

int string_sign(unsigned g, int site) {
  const unsigned below = g & ((1u << site) - 1u);
  return (std::popcount(below) & 1) ? -1 : 1;
}

double probability_entropy(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    double v = p(i);
    if (v <= 0.0) {
      if (v < -1e-10) throw ModelError("negative reduced-density eigenvalue");
      continue;
    }
    if (v > 1.0 + 1e-10) throw ModelError("reduced-density eigenvalue above 1");
    v = std::min(v, 1.0);
    s -= v * std::log(v);
  }
  return s;
}

}  // namespace

ExactDiag::ExactDiag(ModelSpec m, int sites) : model_(std::move(m)), n_(sites) {
  model_.validate();
  if (n_ < 1 || n_ > kMaxSites)
    throw ModelError("exact diagonalization is limited to 1..12 sites");

  const auto [a, b] = finite_couplings(model_, n_, Boundary::open);
  const unsigned dim = 1u << n_;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (unsigned g = 0; g < dim; ++g) {
    for (int l = 0; l < n_; ++l) {
      for (int j = 0; j < n_; ++j) {
        if (a(j, l) != 0.0 && (g & (1u << l))) {
          // A_jl b+_j b_l, b_l first
          const int s1 = string_sign(g, l);
          const unsigned g1 = g & ~(1u << l);
          if (!(g1 & (1u << j))) {
            const int s2 = string_sign(g1, j);
            h(g1 | (1u << j), g) += a(j, l) * double(s1 * s2);
          }
        }
        if (b(j, l) == 0.0) continue;
        if (!(g & (1u << l))) {
          // (1/2) B_jl b+_j b+_l, b+_l first
          const int s1 = string_sign(g, l);
          const unsigned g1 = g | (1u << l);
          if (!(g1 & (1u << j))) {
            const int s2 = string_sign(g1, j);
            h(g1 | (1u << j), g) += 0.5 * b(j, l) * double(s1 * s2);
          }
        } else {
          // -(1/2) conj(B_jl) b_j b_l, b_l first
          const int s1 = string_sign(g, l);
          const unsigned g1 = g & ~(1u << l);
          if (g1 & (1u << j)) {
            const int s2 = string_sign(g1, j);
            h(g1 & ~(1u << j), g) -=
                0.5 * std::conj(b(j, l)) * double(s1 * s2);
          }
        }
      }
    }
  }

  HermEigensystem es = herm_eigensystem(std::move(h));
  spectrum_ = std::move(es.values);
  ground_ = es.vectors.col(0);
  const double scale =
      std::max(std::abs(spectrum_(0)), std::abs(spectrum_(dim - 1)));
  if (dim > 1 &&
      spectrum_(1) - spectrum_(0) < 1e-10 * std::max(1.0, scale)) {
    degenerate_ = true;
    std::fprintf(stderr,
                 "warning: degenerate ground state (gap %.3e); correlators "
                 "use one member of the ground space\n",
                 spectrum_(1) - spectrum_(0));
  }
}

Eigen::VectorXcd ExactDiag::apply_b(int site, const Eigen::VectorXcd& v) const {
  const unsigned dim = 1u << n_;
  const unsigned bit = 1u << site;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (unsigned g = 0; g < dim; ++g)
    if (g & bit) out(g ^ bit) += double(string_sign(g, site)) * v(g);
  return out;
}

Eigen::VectorXcd ExactDiag::apply_bdag(int site,
                                       const Eigen::VectorXcd& v) const {
  const unsigned dim = 1u << n_;
  const unsigned bit = 1u << site;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (unsigned g = 0; g < dim; ++g)
    if (!(g & bit)) out(g | bit) += double(string_sign(g, site)) * v(g);
  return out;
}

Eigen::VectorXcd ExactDiag::apply_majorana(int mu,
                                           const Eigen::VectorXcd& v) const {
  const int site = mu / 2;
  if (mu % 2 == 0) return apply_b(site, v) + apply_bdag(site, v);
  return cxd(0.0, 1.0) * (apply_b(site, v) - apply_bdag(site, v));
}

cxd ExactDiag::bdag_b(int j, int l) const {
  return apply_b(j, ground_).dot(apply_b(l, ground_));
}

cxd ExactDiag::b_b(int j, int l) const {
  return apply_bdag(j, ground_).dot(apply_b(l, ground_));
}

cxd ExactDiag::majorana_moment(const std::vector<int>& indices) const {
  Eigen::VectorXcd v = ground_;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it)
    v = apply_majorana(*it, v);
  return ground_.dot(v);
}

Eigen::MatrixXcd ExactDiag::second_moments() const {
  std::vector<Eigen::VectorXcd> w(2 * n_);
  for (int mu = 0; mu < 2 * n_; ++mu)
    w[mu] = apply_majorana(mu, ground_);
  Eigen::MatrixXcd m(2 * n_, 2 * n_);
  for (int mu = 0; mu < 2 * n_; ++mu)
    for (int nu = 0; nu < 2 * n_; ++nu) m(mu, nu) = w[mu].dot(w[nu]);
  return m;
}

double ExactDiag::block_entropy(int block_length) const {
  if (block_length < 0 || block_length > n_)
    throw ModelError("block length outside [0, N]");
  if (block_length == 0 || block_length == n_) return 0.0;
  const unsigned rows = 1u << block_length;
  const unsigned cols = 1u << (n_ - block_length);
  // psi[g] = M(g low bits, g high bits): column-major map, low bits fastest.
  Eigen::Map<const Eigen::MatrixXcd> psi(ground_.data(), rows, cols);
  Eigen::MatrixXcd rho;
  if (rows <= cols)
    rho = psi * psi.adjoint();
  else
    rho = psi.adjoint() * psi;
  return probability_entropy(herm_eigenvalues(std::move(rho)));
}

cxd wick_moment(const Eigen::MatrixXcd& second_moments,
                const std::vector<int>& indices) {
  const std::size_t k = indices.size();
  if (k > 6) throw ModelError("pairing expansion is limited to six operators");
  if (k == 0) return 1.0;
  if (k % 2 != 0) return 0.0;
  cxd sum = 0.0;
  double sign = 1.0;
  for (std::size_t j = 1; j < k; ++j, sign = -sign) {
    std::vector<int> rest;
    rest.reserve(k - 2);
    for (std::size_t t = 1; t < k; ++t)
      if (t != j) rest.push_back(indices[t]);
    sum += sign * second_moments(indices[0], indices[j]) *
           wick_moment(second_moments, rest);
  }
  return sum;
}

double spectrum_deviation(const ExactDiag& ed, const FiniteChain& chain) {
  if (ed.sites() > 8)
    throw ModelError("spectrum comparison is limited to 8 sites");
  if (chain.sites() != ed.sites() || chain.boundary() != Boundary::open)
    throw ModelError("spectrum comparison needs the same open chain");
  const std::vector<double>& e = chain.positive_energies();
  const unsigned count = 1u << e.size();
  std::vector<double> sums(count, chain.ground_energy());
  for (unsigned s = 1; s < count; ++s)
    sums[s] = sums[s & (s - 1)] + e[std::countr_zero(s)];
  std::sort(sums.begin(), sums.end());
  const Eigen::VectorXd& exact = ed.spectrum();
  double dev = 0.0;
  for (unsigned i = 0; i < count; ++i)
    dev = std::max(dev, std::abs(sums[i] - exact(i)));
  return dev;
}

}  // namespace qfent
