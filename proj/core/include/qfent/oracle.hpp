#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qfent/finite_chain.hpp"
#include "qfent/model.hpp"

namespace qfent {

// Brute-force ground state of the open chain in the 2^N occupation basis,
// for cross-checking the quadratic-form pipeline on small systems.
// Bit j of a basis index is the occupation of site j; operators carry the
// (-1)^(occupied sites below j) string of the fermionic ordering.
class ExactDiag {
 public:
  static constexpr int kMaxSites = 12;

  ExactDiag(ModelSpec m, int sites);

  int sites() const { return n_; }
  const ModelSpec& model() const { return model_; }

  const Eigen::VectorXd& spectrum() const { return spectrum_; }
  double ground_energy() const { return spectrum_(0); }
  const Eigen::VectorXcd& ground_state() const { return ground_; }
  // True when the two lowest eigenvalues coincide within 1e-10 * scale; the
  // stored state is then one arbitrary member of the ground space.
  bool ground_degenerate() const { return degenerate_; }

  Eigen::VectorXcd apply_b(int site, const Eigen::VectorXcd& v) const;
  Eigen::VectorXcd apply_bdag(int site, const Eigen::VectorXcd& v) const;
  // Majorana index mu addresses site mu/2: even mu is b + b+, odd i(b - b+).
  Eigen::VectorXcd apply_majorana(int mu, const Eigen::VectorXcd& v) const;

  cxd bdag_b(int j, int l) const;
  cxd b_b(int j, int l) const;
  // <m_{i1} ... m_{ik}> in the ground state, operators applied right to left.
  cxd majorana_moment(const std::vector<int>& indices) const;
  // Full 2N x 2N matrix of <m_mu m_nu>.
  Eigen::MatrixXcd second_moments() const;

  // Entanglement entropy of the first block_length sites, 0..N.
  double block_entropy(int block_length) const;

 private:
  ModelSpec model_;
  int n_;
  Eigen::VectorXd spectrum_;
  Eigen::VectorXcd ground_;
  bool degenerate_ = false;
};

// Pairing expansion of a 2k-point function from second moments (k <= 3),
// for checking Gaussianity of a state against its higher moments.
cxd wick_moment(const Eigen::MatrixXcd& second_moments,
                const std::vector<int>& indices);

// Largest gap between the exact spectrum and {E0 + subset sums of the
// positive single-particle energies} of an open chain; sites <= 8.
double spectrum_deviation(const ExactDiag& ed, const FiniteChain& chain);

}  // namespace qfent
