#pragma once

// Von Neumann entropy of fermionic Gaussian states, from either a majorana
// correlation matrix or a set of mode occupations. Natural logarithm
// throughout, so a maximally mixed L-site block gives L ln 2.

#include <Eigen/Dense>

#include <vector>

#include "qfent/correlations.hpp"
#include "qfent/model.hpp"

namespace qfent {

// Entropy contribution of one fermionic mode pair:
//   e(x, nu) = -((x+nu)/2) ln((x+nu)/2) - ((x-nu)/2) ln((x-nu)/2)
// with 0 ln 0 = 0 taken as an exact branch.
double e_func(double x, double nu);

// Clamp a mode occupation to [0, 1]. Values within 1e-9 outside are rounded
// in (eigensolver noise); anything further out throws ModelError.
double clamp_unit(double v);

struct MajoranaEntropy {
  double value;
  std::vector<double> nu;  // singular-value spectrum, one entry per mode pair
};

// Entropy of the Gaussian state with ⟨m_μ m_ν⟩ = δ + iC, for any real
// antisymmetric C (odd dimension allowed: the leftover null direction is a
// free unpaired majorana worth (ln 2)/2).
MajoranaEntropy majorana_entropy(const Eigen::MatrixXd& c);

// sum of -λ ln λ - (1-λ) ln(1-λ) over mode occupations.
double fermion_entropy(const Eigen::VectorXd& occupations);

// L-site block entropy of a pairing-free chain via its kernel eigenvalues.
double gauge_entropy(const ModelSpec& m, int L);

double block_entropy(const CorrelationEngine& engine, int L);

std::vector<std::pair<int, double>> entropy_scan(const CorrelationEngine& engine,
                                                 const std::vector<int>& lengths);

}  // namespace qfent
