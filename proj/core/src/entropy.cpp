#include "qfent/entropy.hpp"

#include <algorithm>
#include <cmath>

#include "qfent/eig.hpp"

namespace qfent {

namespace {
double xlnx(double x) { return x > 0 ? x * std::log(x) : 0.0; }
}  // namespace

double e_func(double x, double nu) {
  return -xlnx(0.5 * (x + nu)) - xlnx(0.5 * (x - nu));
}

double clamp_unit(double v) {
  if (v >= 0.0 && v <= 1.0) return v;
  if (v < 0.0 && v >= -1e-9) return 0.0;
  if (v > 1.0 && v <= 1.0 + 1e-9) return 1.0;
  throw ModelError("mode occupation " + std::to_string(v) +
                   " outside [0,1]: correlation matrix is not a ground state");
}

MajoranaEntropy majorana_entropy(const Eigen::MatrixXd& c) {
  const Eigen::Index n = c.rows();
  if (n != c.cols()) throw ModelError("correlation matrix must be square");
  const double scale = 1.0 + c.cwiseAbs().maxCoeff();
  if ((c + c.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw ModelError("correlation matrix is not antisymmetric");

  // Singular values of antisymmetric C = sqrt of eigenvalues of C^T C.
  Eigen::VectorXd mu = sym_eigenvalues(c.transpose() * c);
  std::vector<double> sigma(n);
  for (Eigen::Index i = 0; i < n; ++i)
    sigma[i] = std::sqrt(std::max(0.0, mu[i]));
  std::sort(sigma.begin(), sigma.end(), std::greater<>());

  MajoranaEntropy out{0.0, {}};
  for (double& s : sigma) {
    if (s > 1.0) {
      if (s > 1.0 + 1e-9)
        throw ModelError("correlation singular value " + std::to_string(s) +
                         " exceeds 1");
      s = 1.0;
    }
    out.value += 0.5 * e_func(1.0, s);
  }
  // Singular values of an antisymmetric matrix come in equal pairs (plus one
  // exact zero when n is odd); report each pair once.
  for (size_t i = 0; i < sigma.size();) {
    out.nu.push_back(sigma[i]);
    if (i + 1 < sigma.size() && sigma[i] - sigma[i + 1] < 1e-8)
      i += 2;
    else
      i += 1;
  }
  return out;
}

double fermion_entropy(const Eigen::VectorXd& occupations) {
  double s = 0;
  for (Eigen::Index i = 0; i < occupations.size(); ++i) {
    const double l = clamp_unit(occupations[i]);
    s += -xlnx(l) - xlnx(1.0 - l);
  }
  return s;
}

double gauge_entropy(const ModelSpec& m, int L) {
  if (L < 1) throw ModelError("block length must be >= 1");
  return fermion_entropy(herm_eigenvalues(gauge_kernel(m, L)));
}

double block_entropy(const CorrelationEngine& engine, int L) {
  return majorana_entropy(engine.correlation_matrix(L)).value;
}

std::vector<std::pair<int, double>> entropy_scan(
    const CorrelationEngine& engine, const std::vector<int>& lengths) {
  std::vector<std::pair<int, double>> out;
  out.reserve(lengths.size());
  for (int L : lengths) out.emplace_back(L, block_entropy(engine, L));
  return out;
}

}  // namespace qfent
