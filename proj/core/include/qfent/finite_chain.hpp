#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qfent/model.hpp"

namespace qfent {

enum class Boundary { open, periodic };

// Site-coupling matrices (A hermitian, B antisymmetric) with the boundary
// wraps applied; [[A, B], [-conj(B), -A^T]] is the BdG form.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> finite_couplings(
    const ModelSpec& m, int sites, Boundary bc);

// Exact ground state of a length-N quadratic chain via Bogoliubov-de Gennes
// diagonalization. "periodic" wraps the fermionic couplings modulo N.
class FiniteChain {
 public:
  FiniteChain(ModelSpec m, int sites, Boundary bc);

  int sites() const { return n_; }
  Boundary boundary() const { return bc_; }
  const ModelSpec& model() const { return model_; }

  // Positive half of the particle-hole symmetric spectrum, ascending.
  const std::vector<double>& positive_energies() const { return energies_; }
  double ground_energy() const { return ground_energy_; }

  // Real antisymmetric majorana correlation matrix C (2N x 2N) with
  // <m_mu m_nu> = delta + i C, majoranas ordered m_0, m_1 per site.
  const Eigen::MatrixXd& majorana_correlations() const { return corr_; }
  // Largest deviation from exact realness/antisymmetry before cleanup.
  double correlation_defect() const { return defect_; }

  // Entropy of the restriction to the first L sites. Uses the smaller of the
  // block and its complement (equal by purity of the global state).
  double block_entropy(int block_length) const;
  // S(first L) - S(first N-L): the reflection-asymmetry witness.
  double entropy_asymmetry(int block_length) const;

 private:
  ModelSpec model_;
  int n_;
  Boundary bc_;
  std::vector<double> energies_;
  double ground_energy_ = 0.0;
  double defect_ = 0.0;
  Eigen::MatrixXd corr_;
};

struct ProfileRow {
  int block_length;
  double entropy;
  double asymmetry;
};

// Entropy and asymmetry rows for L = stride, 2*stride, ..., < N.
std::vector<ProfileRow> entropy_profile(const FiniteChain& chain,
                                        int stride = 1);

struct CcFit {
  double central_charge;
  double constant;
  double rms_residual;
};

// Least-squares fit of S against ln((2N/pi) sin(pi L/N)) over the window
// lo <= L/N <= hi; the slope is reported as 6*slope = central charge.
CcFit cc_fit(const std::vector<ProfileRow>& rows, int sites, double lo = 0.1,
             double hi = 0.9);

struct Saturation {
  double entropy;       // saturated block entropy of the infinite chain
  int block_length;     // first L at which the increment fell below tolerance
  double corr_length;   // from the exponential decay of <b+_0 b_n>
};

// Saturation entropy and correlation length of a non-critical model, computed
// on the infinite chain (blocks L = 10, 20, ... until |increment| < tol).
Saturation saturation_scan(const ModelSpec& m, double tol = 1e-6,
                           int max_block = 400);

struct SweepRow {
  double parameter;
  Saturation saturation;
};

// 3 * slope of entropy against ln(correlation length) across sweep rows.
double central_charge_estimate(const std::vector<SweepRow>& rows);

}  // namespace qfent
