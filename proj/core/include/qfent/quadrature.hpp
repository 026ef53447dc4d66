#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature with an absolute error target.
// The correlation integrands are piecewise smooth with jumps exactly at the
// dispersion zeros; callers split the domain there and this integrator
// handles each smooth piece (bisection with per-interval error |K15-G7|,
// halving the budget on each split so the leaf budgets sum to the target).

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qfent {

class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// QUADPACK dqk15 nodes and weights on [-1,1]; Kronrod nodes xgk (odd indices
// are the embedded Gauss-7 nodes), Kronrod weights wgk, Gauss weights wg.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

inline double err_norm(double v) { return std::abs(v); }
inline double err_norm(const std::complex<double>& v) { return std::abs(v); }

template <class F>
auto gk15(F&& f, double a, double b, double* err) {
  using R = std::decay_t<decltype(f(a))>;
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  R gauss{}, kronrod{};
  {
    const R fc = f(c);
    kronrod = kWgk[7] * fc;
    gauss = kWg[3] * fc;
  }
  for (int i = 0; i < 7; ++i) {
    const double x = h * kXgk[i];
    const R fs = f(c - x) + f(c + x);
    kronrod += kWgk[i] * fs;
    if (i % 2 == 1) gauss += kWg[i / 2] * fs;
  }
  kronrod *= h;
  gauss *= h;
  *err = err_norm(R(kronrod - gauss));
  return kronrod;
}

template <class F, class R>
void adapt(F& f, double a, double b, double tol, int depth, R* acc) {
  double err = 0.0;
  const R val = gk15(f, a, b, &err);
  if (err <= tol || depth >= 60) {
    if (depth >= 60 && err > 1e3 * tol)
      throw QuadratureError("adaptive quadrature failed to converge");
    *acc += val;
    return;
  }
  const double c = 0.5 * (a + b);
  adapt(f, a, c, 0.5 * tol, depth + 1, acc);
  adapt(f, c, b, 0.5 * tol, depth + 1, acc);
}

}  // namespace detail

// Integrate f over [a,b] to absolute accuracy tol.
template <class F>
auto integrate(F&& f, double a, double b, double tol) {
  using R = std::decay_t<decltype(f(a))>;
  R acc{};
  if (a == b) return acc;
  detail::adapt(f, a, b, tol, 0, &acc);
  return acc;
}

// Integrate f over [a,b] split at the interior points of `breaks`
// (an ascending list; entries outside (a,b) are ignored).
template <class F>
auto integrate_split(F&& f, double a, double b, const std::vector<double>& breaks,
                     double tol) {
  using R = std::decay_t<decltype(f(a))>;
  std::vector<double> pts{a};
  for (double t : breaks)
    if (t > a + 1e-14 && t < b - 1e-14) pts.push_back(t);
  pts.push_back(b);
  R acc{};
  const double per = tol / static_cast<double>(pts.size() - 1);
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    detail::adapt(f, pts[i], pts[i + 1], per, 0, &acc);
  return acc;
}

}  // namespace qfent
