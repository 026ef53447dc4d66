#include <cmath>
#include <complex>

#include "doctest.h"
#include "qfent/model.hpp"
#include "qfent/quadrature.hpp"

using namespace qfent;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("smooth integrands to absolute tolerance") {
  const double s = integrate([](double t) { return std::sin(t); }, 0.0, kPi,
                             1e-13);
  CHECK(s == doctest::Approx(2.0).epsilon(1e-13));

  const double p = integrate([](double t) { return t * t * t * t; }, -1.0, 2.0,
                             1e-13);
  CHECK(p == doctest::Approx(33.0 / 5.0).epsilon(1e-13));
}

TEST_CASE("oscillatory periodic integrands cancel") {
  for (int k = 1; k <= 5; ++k) {
    const double v = integrate([k](double t) { return std::cos(k * t); }, -kPi,
                               kPi, 1e-12);
    CHECK(std::abs(v) < 1e-11);
  }
}

TEST_CASE("complex-valued integrands") {
  const cxd v = integrate([](double t) { return std::exp(cxd(0, t)); }, 0.0,
                          1.0, 1e-13);
  CHECK(v.real() == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
  CHECK(v.imag() == doctest::Approx(1.0 - std::cos(1.0)).epsilon(1e-13));
}

TEST_CASE("splitting at interior kinks") {
  // |cos t| has kinks at pi/2 and 3pi/2
  auto f = [](double t) { return std::abs(std::cos(t)); };
  const double v =
      integrate_split(f, 0.0, 2 * kPi, {kPi / 2, 3 * kPi / 2}, 1e-12);
  CHECK(v == doctest::Approx(4.0).epsilon(1e-11));
  // break points outside the interval are ignored
  const double w = integrate_split(f, 0.0, 1.0, {5.0, -3.0}, 1e-12);
  CHECK(w == doctest::Approx(std::sin(1.0)).epsilon(1e-11));
}

TEST_CASE("sharp feature is resolved adaptively") {
  // narrow Lorentzian; analytic integral over the line is pi, tails tiny
  auto f = [](double t) {
    const double eps = 1e-5;
    return eps / (t * t + eps * eps);
  };
  const double v = integrate(f, -1.0, 1.0, 1e-10);
  CHECK(v == doctest::Approx(2 * std::atan(1.0 / 1e-5)).epsilon(1e-9));
}
