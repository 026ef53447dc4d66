#include "qfent/transforms.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qfent/entropy.hpp"

namespace qfent {

namespace {

double coeff_scale(const ModelSpec& m) {
  double s = 0.0;
  for (const cxd& c : m.hop) s = std::max(s, std::abs(c));
  for (const cxd& c : m.pair) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace

Eigen::Matrix2d MajoranaCoupling::block(int d) const {
  const int n = range();
  if (d > n || d < -n) return Eigen::Matrix2d::Zero();
  if (d >= 0) return scale * tau[d];
  return -scale * tau[-d].transpose();
}

double MajoranaCoupling::max_entry() const {
  double s = 0.0;
  for (const Eigen::Matrix2d& t : tau) s = std::max(s, t.cwiseAbs().maxCoeff());
  return s * std::abs(scale);
}

MajoranaCoupling to_majorana(const ModelSpec& m) {
  m.validate();
  MajoranaCoupling out;
  out.scale = 1.0;
  out.tau.resize(m.range() + 1);
  for (int d = 0; d <= m.range(); ++d) {
    const cxd a = m.a_coeff(d);
    const cxd b = m.b_coeff(d);
    Eigen::Matrix2d& t = out.tau[d];
    t(0, 0) = 0.25 * (a + b).imag();
    t(0, 1) = 0.25 * (b - a).real();
    t(1, 0) = 0.25 * (a + b).real();
    t(1, 1) = 0.25 * (a - b).imag();
  }
  out.genuine_toeplitz = is_genuine_toeplitz(out);
  return out;
}

ModelSpec from_majorana(const MajoranaCoupling& c) {
  const double tol = 1e-12 * std::max(1.0, c.max_entry());
  ModelSpec m;
  m.hop.resize(c.range() + 1);
  m.pair.resize(c.range() + 1);
  for (int d = 0; d <= c.range(); ++d) {
    const Eigen::Matrix2d t = c.block(d);
    cxd a = 2.0 * cxd(t(1, 0) - t(0, 1), t(0, 0) + t(1, 1));
    cxd b = 2.0 * cxd(t(1, 0) + t(0, 1), t(0, 0) - t(1, 1));
    if (d == 0) {
      if (std::abs(a.imag()) > tol || std::abs(b) > tol)
        throw ModelError("coupling block at offset 0 is not antisymmetric");
      a = cxd(a.real(), 0.0);
      b = cxd(0.0, 0.0);
    }
    m.hop[d] = a;
    m.pair[d] = b;
  }
  m.validate();
  return m;
}

bool is_genuine_toeplitz(const MajoranaCoupling& c, double tol) {
  const double s = std::max(1.0, c.max_entry());
  for (int d = 0; d <= c.range(); ++d) {
    const Eigen::Matrix2d t = c.block(d);
    if (std::abs(t(0, 0) - t(1, 1)) > tol * s) return false;
    const double next21 = c.block(d + 1)(1, 0);
    if (std::abs(t(0, 1) - next21) > tol * s) return false;
  }
  return true;
}

KwReduction kw_selfdual_reduce(const ModelSpec& m) {
  const MajoranaCoupling c = to_majorana(m);
  const double s = std::max(1.0, c.max_entry());
  for (int d = 0; d <= c.range(); ++d) {
    const Eigen::Matrix2d t = c.block(d);
    if (std::abs(t(0, 0) - t(1, 1)) > 1e-12 * s)
      throw ModelError("not selfdual: scalar diagonal 2*" + std::to_string(d) +
                       " is not constant");
    if (std::abs(t(0, 1) - c.block(d + 1)(1, 0)) > 1e-12 * s)
      throw ModelError("not selfdual: scalar diagonal 2*" + std::to_string(d) +
                       "+1 is not constant");
  }

  KwReduction out;
  out.t_scalar.assign(2 * c.range() + 2, 0.0);
  for (int d = 0; d <= c.range(); ++d) {
    out.t_scalar[2 * d] = c.block(d)(0, 0);
    out.t_scalar[2 * d + 1] = c.block(d)(0, 1);
  }
  int last = 0;
  for (int s_idx = 1; s_idx < static_cast<int>(out.t_scalar.size()); ++s_idx)
    if (std::abs(out.t_scalar[s_idx]) > 1e-15 * s) last = s_idx;
  if (last == 0) throw ModelError("selfdual reduction of a vanishing coupling");
  out.reduced.hop.resize(last + 1);
  out.reduced.hop[0] = cxd(0.0, 0.0);
  for (int s_idx = 1; s_idx <= last; ++s_idx)
    out.reduced.hop[s_idx] = cxd(0.0, -out.t_scalar[s_idx]);
  out.reduced.validate();
  return out;
}

double kw_block_entropy(const KwReduction& r, int block_length) {
  return 0.5 * gauge_entropy(r.reduced, 2 * block_length);
}

DecoupledChains decouple_direct(const ModelSpec& m) {
  m.validate();
  const double s = std::max(1.0, coeff_scale(m));
  for (const cxd& c : m.hop)
    if (std::abs(c.real()) > 1e-12 * s)
      throw ModelError("hopping is not purely imaginary");
  for (const cxd& c : m.pair)
    if (std::abs(c.real()) > 1e-12 * s)
      throw ModelError("pairing is not purely imaginary");

  const int n0 = m.range();
  DecoupledChains out;
  out.plus.hop.assign(n0, cxd(0.0, 0.0));
  out.minus.hop.assign(n0, cxd(0.0, 0.0));
  for (int n = 1; n < n0; ++n) {
    const double alpha = m.hop[n].imag();
    const double beta =
        n < static_cast<int>(m.pair.size()) ? m.pair[n].imag() : 0.0;
    out.plus.hop[n] = cxd(0.0, -(alpha + beta));
    out.minus.hop[n] = cxd(0.0, beta - alpha);
  }
  out.plus.validate();
  out.minus.validate();
  return out;
}

double decoupled_block_entropy(const DecoupledChains& chains,
                               int block_length) {
  return 0.5 * (gauge_entropy(chains.plus, block_length) +
                gauge_entropy(chains.minus, block_length));
}

XyIsingChains xy_ising_decouple(const MajoranaCoupling& c) {
  const double s = std::max(1.0, c.max_entry());
  for (int d = 0; d <= c.range(); ++d) {
    const Eigen::Matrix2d t = c.block(d);
    char witness[96] = {0};
    if (d % 2 == 0) {
      if (std::abs(t(1, 0)) > 1e-12 * s)
        std::snprintf(witness, sizeof witness,
                      "entry (2,1) at even offset %d is nonzero", d);
      else if (d > 0 && std::abs(t(0, 1)) > 1e-12 * s)
        std::snprintf(witness, sizeof witness,
                      "entry (1,2) at even offset %d is nonzero", d);
    } else {
      if (std::abs(t(0, 0)) > 1e-12 * s || std::abs(t(1, 1)) > 1e-12 * s)
        std::snprintf(witness, sizeof witness,
                      "diagonal entry at odd offset %d is nonzero", d);
    }
    if (witness[0] != 0)
      throw ModelError(std::string("sublattice decoupling pattern fails: ") +
                       witness);
  }

  const int half_range = c.range() / 2 + 1;
  XyIsingChains out;
  out.first.tau.resize(half_range + 1);
  out.second.tau.resize(half_range + 1);
  for (int D = 0; D <= half_range; ++D) {
    Eigen::Matrix2d& t1 = out.first.tau[D];
    Eigen::Matrix2d& t2 = out.second.tau[D];
    t1(0, 0) = c.block(2 * D)(0, 0);
    t1(0, 1) = c.block(2 * D + 1)(0, 1);
    t1(1, 0) = c.block(2 * D - 1)(1, 0);
    t1(1, 1) = c.block(2 * D)(1, 1);
    t2(0, 0) = c.block(2 * D)(1, 1);
    t2(0, 1) = c.block(2 * D + 1)(1, 0);
    t2(1, 0) = c.block(2 * D - 1)(0, 1);
    t2(1, 1) = c.block(2 * D)(0, 0);
  }
  for (MajoranaCoupling* chain : {&out.first, &out.second}) {
    int last = 0;
    for (int D = 0; D < static_cast<int>(chain->tau.size()); ++D)
      if (chain->tau[D].cwiseAbs().maxCoeff() > 1e-14 * s) last = D;
    chain->tau.resize(last + 1);
    chain->scale = 1.0;
    chain->genuine_toeplitz = is_genuine_toeplitz(*chain);
  }
  return out;
}

RotationResult rotate_to_real_pairing(const ModelSpec& m) {
  m.validate();
  const double s = std::max(1.0, coeff_scale(m));
  RotationResult out;

  double max_imag = 0.0;
  for (const cxd& c : m.pair) max_imag = std::max(max_imag, std::abs(c.imag()));
  if (max_imag <= 1e-14 * s) {
    out.reducible = true;
    out.phase = 0.0;
    out.model = m;
    return out;
  }

  // A uniform gauge rotation multiplies every pairing coefficient by a common
  // phase while leaving the hopping untouched. It can reach a real pairing
  // exactly when the vectors (Re pair_n, Im pair_n) share one direction; any
  // rotation mixing the hopping into the pairing would break the even/odd
  // coefficient structure of a chain model, so only this family is searched.
  std::vector<Eigen::RowVector2d> rows;
  for (const cxd& c : m.pair)
    if (std::abs(c) > 1e-14 * s)
      rows.emplace_back(Eigen::RowVector2d(c.real(), c.imag()));
  Eigen::MatrixXd system(rows.size(), 2);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    system.row(i) = rows[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv.size() > 1 && sv(1) > 1e-10 * sv(0)) {
    out.reducible = false;
    return out;
  }
  const Eigen::Vector2d direction = svd.matrixV().col(0);
  const double phase = std::atan2(direction(1), direction(0));

  out.reducible = true;
  out.phase = phase;
  out.model = m;
  const cxd rot = std::polar(1.0, -phase);
  for (std::size_t n = 0; n < m.pair.size(); ++n) {
    const cxd rotated = rot * m.pair[n];
    if (std::abs(rotated.imag()) > 1e-8 * s)
      throw ModelError("pairing phase removal left an imaginary residue");
    out.model.pair[n] = cxd(rotated.real(), 0.0);
  }
  return out;
}

}  // namespace qfent
