#include <cmath>
#include <random>

#include "doctest.h"
#include "qfent/correlations.hpp"
#include "qfent/eig.hpp"
#include "qfent/entropy.hpp"
#include "qfent/finite_chain.hpp"
#include "qfent/model.hpp"
#include "test_support.hpp"

using namespace qfent;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kLn2 = std::log(2.0);

ModelSpec demo_breaking_model() {
  ModelSpec m;
  m.hop = {cxd(12, 0), cxd(7, 28), cxd(4, 5)};
  m.pair = {cxd(0, 0), cxd(-11, 10), cxd(-3, 4)};
  m.validate();
  return m;
}
}  // namespace

TEST_CASE("two-site hopping dimer ground state") {
  const FiniteChain chain(nn_model(0.0, 0.0, 0.0), 2, Boundary::open);
  CHECK(chain.ground_energy() == doctest::Approx(-1.0).epsilon(1e-12));
  REQUIRE(chain.positive_energies().size() == 2);
  CHECK(chain.positive_energies()[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(chain.positive_energies()[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(chain.block_entropy(1) == doctest::Approx(kLn2).epsilon(1e-10));
  CHECK_THROWS_AS(chain.block_entropy(0), ModelError);
  CHECK_THROWS_AS(chain.block_entropy(2), ModelError);
  CHECK(chain.correlation_defect() < 1e-12);
}

TEST_CASE("single-particle energies match the particle-hole doubled form") {
  std::mt19937_64 g(51);
  for (int trial = 0; trial < 4; ++trial) {
    const ModelSpec m = qtest::random_model(g);
    const int n = 20;
    const FiniteChain chain(m, n, Boundary::open);
    const auto [a, b] = finite_couplings(m, n, Boundary::open);
    CHECK((a - a.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((b + b.transpose()).cwiseAbs().maxCoeff() < 1e-13);
    Eigen::MatrixXcd h(2 * n, 2 * n);
    h.topLeftCorner(n, n) = a;
    h.topRightCorner(n, n) = b;
    h.bottomLeftCorner(n, n) = -b.conjugate();
    h.bottomRightCorner(n, n) = -a.transpose();
    const Eigen::VectorXd e = herm_eigenvalues(h);
    const double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
    // spectrum is symmetric about zero
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(e(i) + e(2 * n - 1 - i)) < 1e-10 * scale);
    const auto& pos = chain.positive_energies();
    REQUIRE(static_cast<int>(pos.size()) == n);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(pos[i] - e(n + i)) < 1e-8 * scale);
    // ground energy = (tr A - sum of positive energies) / 2
    double sum = 0.0;
    for (double v : pos) sum += v;
    CHECK(chain.ground_energy() ==
          doctest::Approx(0.5 * (a.trace().real() - sum)).epsilon(1e-9));
  }
}

TEST_CASE("periodic chain reproduces the momentum-space ring") {
  const ModelSpec m = nn_model(1.0, 0.5, 0.0);
  const int n = 12;
  const FiniteChain chain(m, n, Boundary::periodic);
  const RingCorrelations ring(m, n);
  const Eigen::MatrixXd& c = chain.majorana_correlations();
  double gap = 0.0;
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      const Eigen::Matrix2d blk = ring.pi_block(j - l);
      gap = std::max(gap, (c.block(2 * j, 2 * l, 2, 2) - blk)
                              .cwiseAbs()
                              .maxCoeff());
    }
  CHECK(gap < 1e-10);
  for (int L : {3, 6})
    CHECK(chain.block_entropy(L) ==
          doctest::Approx(majorana_entropy(ring.correlation_matrix(L)).value)
              .epsilon(1e-10));
}

TEST_CASE("real couplings give a reflection-symmetric entropy profile") {
  const FiniteChain chain(nn_model(1.0, 0.5, 0.0), 36, Boundary::open);
  for (int L = 1; L < 36; ++L)
    CHECK(std::abs(chain.entropy_asymmetry(L)) < 1e-10);
}

TEST_CASE("zero-field open chain has unpaired edge majoranas") {
  CHECK_THROWS_AS(FiniteChain(nn_model(1.0, 0.0, 0.0), 8, Boundary::open),
                  DegeneracyError);
}

TEST_CASE("entropy profile respects stride and length bounds") {
  const FiniteChain chain(nn_model(1.0, 0.5, 0.0), 24, Boundary::open);
  const auto rows = entropy_profile(chain, 4);
  REQUIRE(rows.size() == 5);  // L = 4, 8, ..., 20
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].block_length == static_cast<int>(4 * (i + 1)));
    CHECK(rows[i].entropy ==
          doctest::Approx(chain.block_entropy(rows[i].block_length))
              .epsilon(1e-12));
    CHECK(rows[i].asymmetry ==
          doctest::Approx(chain.entropy_asymmetry(rows[i].block_length))
              .epsilon(1e-12));
  }
}

TEST_CASE("conformal fit recovers a synthetic central charge") {
  const int n = 100;
  std::vector<ProfileRow> rows;
  for (int L = 1; L < n; ++L) {
    const double x = std::log(2.0 * n / kPi * std::sin(kPi * L / n));
    rows.push_back({L, x / 6.0 + 0.25, 0.0});
  }
  const CcFit fit = cc_fit(rows, n);
  CHECK(fit.central_charge == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fit.constant == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(fit.rms_residual < 1e-12);
  // too narrow a window leaves nothing to fit
  CHECK_THROWS_AS(cc_fit(rows, n, 0.498, 0.502), ModelError);
}

TEST_CASE("critical ring entropy fits the conformal profile") {
  // fermi points of cos(theta) = 0.3 sit between the 64 ring momenta;
  // the fit abscissa is calibrated for open chains, so a periodic chain
  // (two entangling cuts) reads out twice the charge
  const FiniteChain chain(nn_model(0.0, 0.3, 0.0), 64, Boundary::periodic);
  const CcFit fit = cc_fit(entropy_profile(chain), 64);
  CHECK(std::abs(fit.central_charge - 2.0) < 0.15);
}

TEST_CASE("saturation scan on a gapped chain") {
  const Saturation sat = saturation_scan(nn_model(1.0, 0.5, 0.0), 1e-8);
  const CorrelationEngine eng(nn_model(1.0, 0.5, 0.0));
  CHECK(std::abs(sat.entropy - block_entropy(eng, 200)) < 1e-6);
  CHECK(sat.corr_length > 0.0);
  CHECK(sat.corr_length < 5.0);
  CHECK_THROWS_AS(saturation_scan(nn_model(1.0, 1.0, 0.0)), ModelError);
}

TEST_CASE("interaction-range wraps need enough sites") {
  const ModelSpec wide = demo_breaking_model();  // range 3
  CHECK_THROWS_AS(FiniteChain(wide, 4, Boundary::periodic), ModelError);
  CHECK_NOTHROW(FiniteChain(wide, 8, Boundary::periodic));
}

TEST_CASE("broken reflection symmetry shows up at finite size") {
  const FiniteChain chain(demo_breaking_model(), 64, Boundary::open);
  double max_asym = 0.0;
  for (const ProfileRow& r : entropy_profile(chain))
    max_asym = std::max(max_asym, std::abs(r.asymmetry));
  CHECK(max_asym > 1e-3);
}
