#pragma once

// Dense symmetric/Hermitian eigensolvers. Small problems go through Eigen;
// large ones through LAPACK divide-and-conquer when the library was found at
// configure time. Eigenvalues are always returned ascending.

#include <Eigen/Dense>

namespace qfent {

Eigen::VectorXd sym_eigenvalues(Eigen::MatrixXd a);
Eigen::VectorXd herm_eigenvalues(Eigen::MatrixXcd a);

struct HermEigensystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;  // columns, same order as values
};

HermEigensystem herm_eigensystem(Eigen::MatrixXcd a);

struct RealSchurPair {
  Eigen::MatrixXd t;  // quasi upper triangular, a = u t u^T
  Eigen::MatrixXd u;  // orthogonal
};

RealSchurPair real_schur(Eigen::MatrixXd a);

}  // namespace qfent
