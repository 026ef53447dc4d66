#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "qfent/correlations.hpp"
#include "qfent/model.hpp"
#include "test_support.hpp"

using namespace qfent;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("free hopping chain at half filling") {
  // hop = {0, 1}: dispersion 2 cos(theta), Fermi points at +-pi/2
  const CorrelationEngine eng(nn_model(0.0, 0.0, 0.0));
  CHECK(eng.bdag_b(0).real() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(eng.bdag_b(1).real() == doctest::Approx(-1.0 / kPi).epsilon(1e-10));
  CHECK(eng.bdag_b(-1).real() == doctest::Approx(-1.0 / kPi).epsilon(1e-10));
  CHECK(std::abs(eng.bdag_b(2)) < 1e-10);
  CHECK(eng.bdag_b(3).real() == doctest::Approx(1.0 / (3 * kPi)).epsilon(1e-9));
  CHECK(std::abs(eng.b_b(1)) < 1e-10);
}

TEST_CASE("two-site ring exchange correlator") {
  const RingCorrelations ring(nn_model(0.0, 0.0, 0.0), 2);
  CHECK(ring.bdag_b(1).real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(ring.bdag_b(0).real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(ring.bdag_b(1).imag()) < 1e-12);
}

TEST_CASE("fully dimerized transverse-field chain at zero field") {
  const CorrelationEngine eng(nn_model(1.0, 0.0, 0.0));
  // adjacent-site majorana dimer: second majorana of site l binds to the
  // first majorana of site l+1; everything else vanishes
  CHECK(eng.pi_block(1)(0, 1) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(eng.pi_block(-1)(1, 0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(eng.pi_block(0)(0, 1)) < 1e-10);
  CHECK(std::abs(eng.pi_block(1)(1, 0)) < 1e-10);
  CHECK(std::abs(eng.pi_block(2).cwiseAbs().maxCoeff()) < 1e-10);
  // accessor argument is d = j - l: b_b(1) = <b_{l+1} b_l>
  CHECK(eng.b_b(1).real() == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(eng.b_b(-1).real() == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(eng.bdag_b(1).real() == doctest::Approx(-0.25).epsilon(1e-10));
}

TEST_CASE("critical transverse-field chain majorana kernel") {
  const CorrelationEngine eng(nn_model(1.0, 1.0, 0.0));
  const Eigen::MatrixXd c = eng.correlation_matrix(4);
  for (int mu = 0; mu < 8; ++mu)
    for (int nu = 0; nu < 8; ++nu) {
      const int diff = mu - nu;
      if (diff % 2 == 0) {
        CHECK(std::abs(c(mu, nu)) < 1e-9);
      } else {
        CHECK(c(mu, nu) == doctest::Approx(-2.0 / (kPi * diff)).epsilon(1e-8));
      }
    }
}

TEST_CASE("correlation blocks are antisymmetric under d -> -d") {
  std::mt19937_64 g(21);
  for (int trial = 0; trial < 5; ++trial) {
    const CorrelationEngine eng(qtest::random_model(g));
    for (long d : {0L, 1L, 2L, 5L}) {
      const Eigen::Matrix2d fwd = eng.pi_block(d);
      const Eigen::Matrix2d bwd = eng.pi_block(-d);
      CHECK((bwd + fwd.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    }
    const Eigen::MatrixXd c = eng.correlation_matrix(6);
    CHECK((c + c.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("gapped current term leaves the correlations alone") {
  // inside the gapped region the odd hopping component never tilts the
  // dispersion below zero, so Im(hop) drops out of the ground state
  std::mt19937_64 g(22);
  for (int trial = 0; trial < 6; ++trial) {
    const double gamma = qtest::uniform(g, 0.4, 1.0);
    const double h = qtest::uniform(g, 0.0, 0.85);
    const double dmax = std::sqrt(std::max(0.0, gamma * gamma - 1e-3));
    const double D = qtest::uniform(g, 0.0, 0.9 * dmax);
    const ModelSpec with = nn_model(gamma, h, D);
    REQUIRE(!classify(with).critical);
    ModelSpec real_a = with;
    for (auto& cc : real_a.hop) cc = cxd(cc.real(), 0.0);
    const Eigen::MatrixXd a = CorrelationEngine(with).correlation_matrix(10);
    const Eigen::MatrixXd b = CorrelationEngine(real_a).correlation_matrix(10);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("gauge kernel agrees with the quadrature engine") {
  std::mt19937_64 g(23);
  for (int trial = 0; trial < 6; ++trial) {
    const ModelSpec m = qtest::random_gauge_model(g);
    const GaugeArcs arcs = gauge_occupied_arcs(m);
    const CorrelationEngine eng(m);
    for (long d : {0L, 1L, 3L, 7L}) {
      CHECK(std::abs(gauge_kernel_coeff(arcs, d) - eng.bdag_b(d)) < 1e-10);
    }
    const Eigen::MatrixXcd k = gauge_kernel(m, 5);
    CHECK((k - k.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    for (int j = 0; j < 5; ++j)
      for (int l = 0; l < 5; ++l)
        CHECK(std::abs(k(j, l) - eng.bdag_b(j - l)) < 1e-10);
  }
}

TEST_CASE("ring correlations approach the infinite chain") {
  const ModelSpec m = nn_model(1.0, 0.5, 0.0);  // gapped
  const CorrelationEngine eng(m);
  const RingCorrelations ring(m, 64);
  for (long d : {0L, 1L, 2L, 3L})
    CHECK(std::abs(ring.bdag_b(d) - eng.bdag_b(d)) < 1e-8);
  // commensurate zero modes on the momentum grid are rejected
  CHECK_THROWS_AS(RingCorrelations(nn_model(0.0, 0.0, 0.0), 24),
                  DegeneracyError);
}

TEST_CASE("occupation symbol is a spectral projection") {
  const ModelSpec m = nn_model(0.0, 0.3, 0.0);  // pairing-free
  for (double theta : {0.1, 0.9, 1.4, 2.8}) {
    const double occ = occupation_symbol(m, theta);
    const double expected = m.a_sym(-theta) < 0 ? 1.0 : 0.0;
    CHECK(occ == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(pairing_symbol(m, theta)) < 1e-12);
  }
}
