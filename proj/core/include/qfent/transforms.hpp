#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qfent/model.hpp"

namespace qfent {

// Real antisymmetric majorana coupling of a translation-invariant chain,
// stored as 2x2 blocks tau[d] indexed by the site offset d >= 0 of the column
// pair relative to the row pair. Blocks at negative offsets follow from
// antisymmetry: block(-d) = -block(d)^T.
struct MajoranaCoupling {
  std::vector<Eigen::Matrix2d> tau;  // d = 0 .. range()
  double scale = 1.0;                // multiplies every stored block
  bool genuine_toeplitz = false;

  int range() const { return static_cast<int>(tau.size()) - 1; }
  Eigen::Matrix2d block(int d) const;
  double max_entry() const;
};

// Rewrites the hopping/pairing data in the majorana basis
// m_{2j} = b_j + b+_j, m_{2j+1} = i(b_j - b+_j):
// H = i sum_{j,l} m-vec_j^T tau(l-j) m-vec_l + const.
MajoranaCoupling to_majorana(const ModelSpec& m);

// Inverse of to_majorana; the reconstructed hop[0] must come out real.
ModelSpec from_majorana(const MajoranaCoupling& c);

// True when the 2x2-blocked coupling is constant along every scalar diagonal,
// i.e. tau(d)_11 = tau(d)_22 and tau(d)_12 = tau(d+1)_21 for all d.
bool is_genuine_toeplitz(const MajoranaCoupling& c, double tol = 1e-12);

// Reduction of a genuine-Toeplitz (selfdual) coupling to a gauge-invariant
// chain on the scalar majorana lattice. Entropy rule:
// S_L(original) = 1/2 * S_{2L}(reduced), with the reduced entropy taken on the
// half-filled kernel path.
struct KwReduction {
  ModelSpec reduced;
  std::vector<double> t_scalar;  // scalar diagonals t_s, s = 0 .. 2*range+1
};
KwReduction kw_selfdual_reduce(const ModelSpec& m);
double kw_block_entropy(const KwReduction& r, int block_length);

// Splitting of a purely imaginary hopping/pairing model into two decoupled
// gauge-invariant chains acting on the even and odd majorana sublattices.
// Entropy rule: S_L(original) = S_L(plus) + S_L(minus) where each summand is
// half the kernel-path entropy of the corresponding chain.
struct DecoupledChains {
  ModelSpec plus, minus;
};
DecoupledChains decouple_direct(const ModelSpec& m);
double decoupled_block_entropy(const DecoupledChains& chains, int block_length);

// Splitting of a coupling whose even-even and odd-odd scalar diagonals vanish
// on alternating parities into two independent chains on the sublattices of
// even and odd site pairs. Entropy rule: S_{2L}(original) = S_L(first) +
// S_L(second).
struct XyIsingChains {
  MajoranaCoupling first, second;
};
XyIsingChains xy_ising_decouple(const MajoranaCoupling& c);

// Attempts to remove the imaginary part of the pairing by a uniform gauge
// rotation b_j -> exp(i*phase/2) b_j. Fails (as a value) when the pairing
// coefficients do not share a common phase direction.
struct RotationResult {
  bool reducible = false;
  double phase = 0.0;  // pairing is multiplied by exp(-i*phase)
  ModelSpec model;
};
RotationResult rotate_to_real_pairing(const ModelSpec& m);

}  // namespace qfent
