#include "qfent/eig.hpp"

#include <stdexcept>

#if defined(QFENT_HAVE_LAPACKE)
#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#endif

namespace qfent {

namespace {
// Below this order the LAPACK call overhead is not worth it.
constexpr int kLapackMinDim = 96;

[[maybe_unused]] void check_info(int info, const char* what) {
  if (info != 0) throw std::runtime_error(std::string(what) + " failed");
}
}  // namespace

Eigen::VectorXd sym_eigenvalues(Eigen::MatrixXd a) {
  [[maybe_unused]] const int n = static_cast<int>(a.rows());
#if defined(QFENT_HAVE_LAPACKE)
  if (n >= kLapackMinDim) {
    Eigen::VectorXd w(n);
    check_info(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n,
                              w.data()),
               "dsyevd");
    return w;
  }
#endif
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
             a, Eigen::EigenvaluesOnly)
      .eigenvalues();
}

Eigen::VectorXd herm_eigenvalues(Eigen::MatrixXcd a) {
  [[maybe_unused]] const int n = static_cast<int>(a.rows());
#if defined(QFENT_HAVE_LAPACKE)
  if (n >= kLapackMinDim) {
    Eigen::VectorXd w(n);
    check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n,
                              w.data()),
               "zheevd");
    return w;
  }
#endif
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(
             a, Eigen::EigenvaluesOnly)
      .eigenvalues();
}

HermEigensystem herm_eigensystem(Eigen::MatrixXcd a) {
  [[maybe_unused]] const int n = static_cast<int>(a.rows());
#if defined(QFENT_HAVE_LAPACKE)
  if (n >= kLapackMinDim) {
    HermEigensystem r;
    r.values.resize(n);
    check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n, a.data(), n,
                              r.values.data()),
               "zheevd");
    r.vectors = std::move(a);
    return r;
  }
#endif
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  return {es.eigenvalues(), es.eigenvectors()};
}

RealSchurPair real_schur(Eigen::MatrixXd a) {
  [[maybe_unused]] const int n = static_cast<int>(a.rows());
#if defined(QFENT_HAVE_LAPACKE)
  if (n >= kLapackMinDim) {
    RealSchurPair r;
    r.u.resize(n, n);
    Eigen::VectorXd wr(n), wi(n);
    int sdim = 0;
    check_info(LAPACKE_dgees(LAPACK_COL_MAJOR, 'V', 'N', nullptr, n, a.data(),
                             n, &sdim, wr.data(), wi.data(), r.u.data(), n),
               "dgees");
    r.t = std::move(a);
    return r;
  }
#endif
  Eigen::RealSchur<Eigen::MatrixXd> schur(a);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("real Schur decomposition failed");
  return {schur.matrixT(), schur.matrixU()};
}

}  // namespace qfent
