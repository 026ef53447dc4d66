#pragma once

// Translation-invariant quadratic fermion chains
//
//   H = sum_{jl} A_{jl} b_j^dag b_l
//     + 1/2 sum_{jl} (B_{jl} b_j^dag b_l^dag - conj(B_{jl}) b_j b_l)
//
// with A hermitian Toeplitz and B antisymmetric Toeplitz, both banded
// (finite range).  Everything downstream (correlations, entropies,
// asymptotics) is driven by the symbol functions on the unit circle
// evaluated here.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfent {

using cxd = std::complex<double>;

class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

// Ground state is degenerate (zero mode / flat band); entropy undefined.
class DegeneracyError : public ModelError {
 public:
  explicit DegeneracyError(const std::string& what) : ModelError(what) {}
};

struct ModelSpec {
  // hop[l]  = A_{0,l}, l = 0..n0-1.  A_{0,-l} = conj(hop[l]); hop[0] real.
  // pair[l] = B_{0,l}, l = 0..n0-1.  B_{0,-l} = -pair[l]; pair[0] = 0.
  std::vector<cxd> hop;
  std::vector<cxd> pair;  // may be shorter than hop; missing entries are 0

  int range() const { return static_cast<int>(hop.size()); }

  // Throws ModelError unless hop[0] is real, pair[0] is zero and range >= 1.
  void validate() const;

  bool gauge_invariant(double tol = 0.0) const;  // all pair coefficients ~ 0
  bool real_coefficients(double tol = 0.0) const;

  // Banded Toeplitz accessors, d = column - row.  Zero outside the band.
  cxd a_coeff(int d) const;   // A_{j,j+d}
  cxd b_coeff(int d) const;   // B_{j,j+d}

  // Symbols A(t) = sum_n e^{-int} A_{0,n} (real by hermiticity) and
  // B(t) = sum_n e^{-int} B_{0,n} (odd in t).
  double a_sym(double theta) const;
  cxd b_sym(double theta) const;

  ModelSpec scaled(double s) const;            // s*H; entropy invariant
  ModelSpec particle_hole_flipped() const;     // b_i -> b_i^dag
};

// The eight real circle functions derived from the symbols, at one angle:
//   a_s = A(t)+A(-t)   (even)      b_s = 2 Re B(t)  (odd)
//   a_a = A(-t)-A(t)   (odd)       b_a = 2 Im B(t)  (odd)
//   delta = a_s^2 + b_s^2 + b_a^2  (even, >= 0)
//   lambda = (a_a + sqrt(delta))/2          one-particle dispersion
//   m_step = (sgn lambda(t) - sgn lambda(-t))/2
//   p_step = (sgn lambda(t) + sgn lambda(-t))/2
// sgn(0) is taken as 0; quadrature splits intervals at dispersion zeros so
// the value at an exact zero never enters an integral.
struct SymbolSample {
  double theta;
  double a_s, a_a, b_s, b_a;
  double delta;
  double lambda;
  double m_step, p_step;
};

SymbolSample eval_components(const ModelSpec& m, double theta);

struct PhasePoint {
  bool critical = false;
  bool reflection_breaking = false;
  bool flat_band = false;  // lambda ~ 0 on an interval; ground state degenerate
  // Angles in [-pi, pi) where lambda vanishes (crossing or touching).
  std::vector<double> dispersion_zeros;
  // Maximal intervals (a, b) in [-pi, pi) with lambda < 0.
  std::vector<std::pair<double, double>> negative_region;
};

// Grid scan plus bisection (1e-10) on sign changes; golden-section refinement
// for touchings.  grid_size must be >= 4*(2*range+1).
PhasePoint classify(const ModelSpec& m, int grid_size = 0);

// Nearest-neighbour anisotropic chain with a z-axis
// Dzyaloshinskii-Moriya current term.  Fermionic coefficients:
//   hop[0] = -2h, hop[1] = 1 - iD, pair[1] = gamma,
// giving lambda(t) = 2 (D sin t + sqrt((cos t - h)^2 + gamma^2 sin^2 t)).
ModelSpec nn_model(double gamma, double h, double D);

// Energy-current-carrying hopping chain:
//   hop[0] = -2h, hop[1] = 2J - 2ih, hop[2] = -2i lam.
ModelSpec current_model(double J, double h, double lam);

struct NNPoint {
  PhasePoint phase;
  std::string region;   // "non-critical", "region-i", "|h|=1", "region-i,|h|=1"
  double d_prime_sq;    // D'^2 = D^2 + 1 - gamma^2
  ModelSpec model;
};

// Analytic phase-region test for nn_model, cross-checked against classify().
// Critical iff D'^2 >= max(1, h^2) (region i, closed) or |h| = 1.
NNPoint nn_phase_region(double gamma, double h, double D);

}  // namespace qfent
