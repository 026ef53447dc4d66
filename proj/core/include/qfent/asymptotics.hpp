#pragma once

#include <complex>
#include <vector>

#include "qfent/model.hpp"

namespace qfent {

// Sign-change locations of a real scalar dispersion symbol on the circle.
struct SymbolZeros {
  std::vector<double> theta;       // ascending, each in (0, 2*pi]
  bool first_arc_positive = true;  // sign of A on (0, theta[0]); sign of A
                                   // everywhere when theta is empty
};

// Locates the zeros of A(theta) for a gauge-invariant model from the roots of
// the associated Laurent polynomial on the unit circle, refines them by
// bisection, and verifies each is a simple sign change.
SymbolZeros find_symbol_zeros(const ModelSpec& m);

struct AsymptoteResult {
  double slope = 0.0;  // coefficient of ln L
  double constant = 0.0;

  double at(int block_length) const;
};

// Large-L entropy asymptote for a gauge-invariant critical symbol with R
// simple jumps: slope R/6 and a constant assembled from pair sums over the
// jump locations. Throws for an empty zero set (saturating model).
AsymptoteResult general_gauge_asymptote(const SymbolZeros& zeros);

// Same asymptote computed through the reflection-symmetric half-circle form.
// Requires the zero set to be symmetric under theta -> 2*pi - theta with no
// zero on the symmetry axis {pi, 2*pi}.
AsymptoteResult keating_mezzadri_asymptote(const SymbolZeros& zeros);

// Closed-form asymptote for the critical nearest-neighbour chain with
// gamma = 1, h = 1 and Dzyaloshinskii D: slope 1/6 for |D| <= 1 and 1/3
// beyond, with the matching constants. Internally cross-checked against the
// halved dual-symbol route.
AsymptoteResult ising_dm_entropy(double D);

// Asymptotic value of det(lambda*I - (2*K_L - I)) for the L-site gauge kernel
// K_L of a critical gauge-invariant model; debug evaluator for cross-checking
// against dense determinants at small L. Requires lambda off [-1, 1].
std::complex<double> fh_determinant(const ModelSpec& m,
                                    std::complex<double> lambda, int L);

}  // namespace qfent
