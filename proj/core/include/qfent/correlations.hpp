#pragma once

// Ground-state two-point functions of a translation-invariant quadratic chain.
//
// Majorana operators per site j (1-based in formulas, 0-based in code):
//   m_{2j-1} = b_j + b†_j,   m_{2j} = i(b_j - b†_j)
// and ⟨m_μ m_ν⟩ = δ_{μν} + i C_{μν} with C real antisymmetric. C is block
// Toeplitz: C(j,l) depends only on d = j - l through a real 2x2 block.
//
// The infinite-chain engine evaluates the blocks by adaptive quadrature of the
// mode-space integrands; the ring variant replaces integrals with sums over
// the N discrete momenta 2πk/N of a periodically wrapped chain.

#include <Eigen/Dense>

#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfent/model.hpp"

namespace qfent {

// Momentum-space occupation ⟨b̃†_θ b̃_θ⟩ of the ground state.
double occupation_symbol(const ModelSpec& m, double theta);

// Momentum-space pairing amplitude entering ⟨b_j b_l⟩.
cxd pairing_symbol(const ModelSpec& m, double theta);

class CorrelationEngine {
 public:
  explicit CorrelationEngine(ModelSpec m, double tol = 1e-12);

  const ModelSpec& model() const { return model_; }
  const PhasePoint& phase() const { return phase_; }
  double tol() const { return tol_; }

  // 2x2 block of C for site separation d = j - l.
  Eigen::Matrix2d pi_block(long d) const;

  // 2L x 2L antisymmetric C for the contiguous block of sites 0..L-1.
  Eigen::MatrixXd correlation_matrix(int L) const;

  // ⟨b†_j b_l⟩ and ⟨b_j b_l⟩ for d = j - l, by direct quadrature of the
  // occupation/pairing symbols (an independent path from pi_block).
  cxd bdag_b(long d) const;
  cxd b_b(long d) const;

 private:
  struct Entry {
    double c11, c12, c21, c22;
  };
  Entry entry(long d) const;  // d >= 0; cached
  Entry compute(long d) const;

  ModelSpec model_;
  PhasePoint phase_;
  double tol_;
  std::vector<double> breaks_;  // integrand kinks in (0, π)
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<long, Entry> cache_;
};

// Correlations of the N-site periodic ring (momenta θ_k = 2πk/N). Throws
// DegeneracyError when some mode energy vanishes on the momentum grid.
class RingCorrelations {
 public:
  RingCorrelations(ModelSpec m, int N);

  int size() const { return n_; }
  const ModelSpec& model() const { return model_; }

  cxd bdag_b(long d) const;  // d = j - l, any integer (period N)
  cxd b_b(long d) const;
  Eigen::Matrix2d pi_block(long d) const;
  Eigen::MatrixXd correlation_matrix(int L) const;  // sites 0..L-1, L <= N

 private:
  ModelSpec model_;
  int n_;
  std::vector<cxd> g_, f_;  // ⟨b†_j b_l⟩, ⟨b_j b_l⟩ at d = 0..N-1
};

// Pairing-free chains. The occupied momentum set {A(θ) < 0} is a finite union
// of arcs of [-π, π), so the kernel ⟨b†_j b_l⟩ has a closed form per entry.
struct GaugeArcs {
  std::vector<std::pair<double, double>> arcs;
  double filling() const;
};

GaugeArcs gauge_occupied_arcs(const ModelSpec& m);

// ⟨b†_j b_l⟩ with d = j - l.
cxd gauge_kernel_coeff(const GaugeArcs& arcs, long d);

// Hermitian L x L matrix K with K(j,l) = ⟨b†_j b_l⟩. Requires an empty pair
// list (gauge-invariant model).
Eigen::MatrixXcd gauge_kernel(const ModelSpec& m, int L);

}  // namespace qfent
