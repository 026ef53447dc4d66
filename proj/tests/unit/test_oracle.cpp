#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "qfent/entropy.hpp"
#include "qfent/finite_chain.hpp"
#include "qfent/model.hpp"
#include "qfent/oracle.hpp"
#include "test_support.hpp"

using namespace qfent;

namespace {
const double kLn2 = std::log(2.0);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Annihilator on site j in the occupation basis with site 0 as the fastest
// bit: a 2x2 lowering matrix dressed with the fermionic Z string below it.
Eigen::MatrixXcd site_annihilator(int n, int j) {
  Eigen::MatrixXcd s(2, 2), z(2, 2);
  s << 0, 1, 0, 0;
  z << 1, 0, 0, -1;
  Eigen::MatrixXcd low = Eigen::MatrixXcd::Identity(1, 1);
  for (int k = 0; k < j; ++k) low = kron(z, low);
  Eigen::MatrixXcd op = kron(s, low);
  const int high = 1 << (n - 1 - j);
  return kron(Eigen::MatrixXcd::Identity(high, high), op);
}

double dense_block_entropy(const Eigen::VectorXcd& psi, int n, int L) {
  const int rows = 1 << L, cols = 1 << (n - L);
  Eigen::Map<const Eigen::MatrixXcd> mat(psi.data(), rows, cols);
  const Eigen::MatrixXcd gram = rows <= cols
                                    ? (mat * mat.adjoint()).eval()
                                    : (mat.adjoint() * mat).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  double s = 0.0;
  for (double p : es.eigenvalues())
    if (p > 1e-14) s -= p * std::log(p);
  return s;
}
}  // namespace

TEST_CASE("hopping dimer entropy and energy") {
  const ExactDiag ed(nn_model(0.0, 0.0, 0.0), 2);
  CHECK(ed.ground_energy() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ed.block_entropy(1) == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(ed.block_entropy(0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ed.block_entropy(2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ed.bdag_b(0, 1).real() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("fully polarized chain is a product state") {
  ModelSpec m;
  m.hop = {cxd(-2, 0)};
  m.validate();
  const ExactDiag ed(m, 6);
  CHECK(!ed.ground_degenerate());
  for (int L = 0; L <= 6; ++L)
    CHECK(std::abs(ed.block_entropy(L)) < 1e-10);
  CHECK(ed.ground_energy() == doctest::Approx(-12.0).epsilon(1e-12));
  CHECK(ed.bdag_b(3, 3).real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadratic pipeline agrees with brute force on a gapped chain") {
  const ModelSpec m = nn_model(1.0, 0.5, 0.0);
  const int n = 8;
  const ExactDiag ed(m, n);
  const FiniteChain chain(m, n, Boundary::open);
  REQUIRE(!ed.ground_degenerate());
  CHECK(ed.ground_energy() ==
        doctest::Approx(chain.ground_energy()).epsilon(1e-10));
  for (int L = 1; L < n; ++L)
    CHECK(ed.block_entropy(L) ==
          doctest::Approx(chain.block_entropy(L)).epsilon(1e-8));
  // second moments carry the majorana correlation matrix
  const Eigen::MatrixXcd m2 = ed.second_moments();
  const Eigen::MatrixXd& c = chain.majorana_correlations();
  for (int mu = 0; mu < 2 * n; ++mu)
    for (int nu = 0; nu < 2 * n; ++nu) {
      const cxd expected(mu == nu ? 1.0 : 0.0, c(mu, nu));
      CHECK(std::abs(m2(mu, nu) - expected) < 1e-8);
    }
  CHECK(spectrum_deviation(ed, chain) < 1e-8);
}

TEST_CASE("random complex models match the schur pipeline") {
  std::mt19937_64 g(61);
  for (int trial = 0; trial < 3; ++trial) {
    const ModelSpec m = qtest::random_model(g);
    const int n = 7;
    const ExactDiag ed(m, n);
    if (ed.ground_degenerate()) continue;  // arbitrary ground member: skip
    const FiniteChain chain(m, n, Boundary::open);
    CHECK(ed.ground_energy() ==
          doctest::Approx(chain.ground_energy()).epsilon(1e-9));
    for (int L = 1; L < n; ++L)
      CHECK(std::abs(ed.block_entropy(L) - chain.block_entropy(L)) < 1e-8);
    CHECK(spectrum_deviation(ed, chain) < 1e-8);
  }
}

TEST_CASE("ground state moments satisfy the gaussian pairing rule") {
  std::mt19937_64 g(62);
  const ModelSpec m = qtest::random_model(g);
  const int n = 8;
  const ExactDiag ed(m, n);
  const Eigen::MatrixXcd m2 = ed.second_moments();

  // odd moments vanish
  CHECK(std::abs(ed.majorana_moment({0, 3, 7})) < 1e-10);
  CHECK(std::abs(wick_moment(m2, {2, 5, 9})) == 0.0);
  // majoranas square to one
  CHECK(std::abs(ed.majorana_moment({4, 4}) - 1.0) < 1e-12);
  CHECK(std::abs(m2(6, 6) - 1.0) < 1e-12);

  std::set<std::vector<int>> seen;
  std::uniform_int_distribution<int> pick(0, 2 * n - 1);
  int done = 0;
  while (done < 20) {
    std::vector<int> idx = {pick(g), pick(g), pick(g), pick(g)};
    if (std::set<int>(idx.begin(), idx.end()).size() != 4) continue;
    if (!seen.insert(idx).second) continue;
    ++done;
    const cxd direct = ed.majorana_moment(idx);
    const cxd paired = wick_moment(m2, idx);
    CHECK(std::abs(direct - paired) < 1e-8);
  }

  // anticommutation: swapping neighbours flips the sign of the moment
  const std::vector<int> idx = {1, 4, 6, 11};
  const std::vector<int> swapped = {4, 1, 6, 11};
  CHECK(std::abs(ed.majorana_moment(idx) + ed.majorana_moment(swapped)) <
        1e-10);
}

TEST_CASE("occupation-basis operators match a dense pauli-string build") {
  std::mt19937_64 g(63);
  const ModelSpec m = qtest::random_model(g);
  const int n = 5;
  const ExactDiag ed(m, n);
  const auto [a, b] = finite_couplings(m, n, Boundary::open);

  const int dim = 1 << n;
  std::vector<Eigen::MatrixXcd> bs;
  for (int j = 0; j < n; ++j) bs.push_back(site_annihilator(n, j));

  // canonical anticommutators
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      const Eigen::MatrixXcd anti =
          bs[j] * bs[l].adjoint() + bs[l].adjoint() * bs[j];
      const double target = j == l ? 1.0 : 0.0;
      CHECK((anti - target * Eigen::MatrixXcd::Identity(dim, dim))
                .cwiseAbs()
                .maxCoeff() < 1e-12);
    }

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      h += a(j, l) * bs[j].adjoint() * bs[l];
      h += 0.5 * b(j, l) * bs[j].adjoint() * bs[l].adjoint();
      h -= 0.5 * std::conj(b(j, l)) * bs[j] * bs[l];
    }
  CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (int i = 0; i < dim; ++i)
    CHECK(std::abs(es.eigenvalues()(i) - ed.spectrum()(i)) < 1e-10 * scale);

  // left-block entropy from the dense ground vector, both orientations
  REQUIRE(!ed.ground_degenerate());
  const Eigen::VectorXcd psi = es.eigenvectors().col(0);
  for (int L = 1; L < n; ++L)
    CHECK(dense_block_entropy(psi, n, L) ==
          doctest::Approx(ed.block_entropy(L)).epsilon(1e-10));

  // applying operators through the bit loops matches the dense matrices
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(dim);
  for (int j = 0; j < n; ++j) {
    CHECK((ed.apply_b(j, v) - bs[j] * v).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((ed.apply_bdag(j, v) - bs[j].adjoint() * v).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("degenerate ground space is flagged") {
  const ExactDiag ed(nn_model(1.0, 0.0, 0.0), 6);
  CHECK(ed.ground_degenerate());
}
