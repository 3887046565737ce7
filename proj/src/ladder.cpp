#include "isospec/ladder.hpp"

#include <cmath>

namespace isospec {

Eigen::MatrixXd position_matrix(int n_max) {
  if (n_max < 0) throw PreconditionError("position_matrix: n_max >= 0");
  int n = n_max + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    double v = std::sqrt(0.5 * (k + 1));
    m(k, k + 1) = v;
    m(k + 1, k) = v;
  }
  return m;
}

Eigen::MatrixXd derivative_matrix(int n_max) {
  if (n_max < 0) throw PreconditionError("derivative_matrix: n_max >= 0");
  int n = n_max + 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  // d/dx psi_k = sqrt(k/2) psi_{k-1} - sqrt((k+1)/2) psi_{k+1}
  for (int k = 0; k + 1 < n; ++k) {
    double v = std::sqrt(0.5 * (k + 1));
    m(k, k + 1) = v;    // <psi_k | d/dx | psi_{k+1}>
    m(k + 1, k) = -v;
  }
  return m;
}

Eigen::MatrixXcd momentum_matrix(int n_max) {
  return std::complex<double>(0.0, -1.0) * derivative_matrix(n_max).cast<std::complex<double>>();
}

Eigen::MatrixXcd weyl_monomial_matrix_1d(int a, int b, int n_max) {
  if (a < 0 || b < 0) throw PreconditionError("weyl_monomial_matrix_1d: need a,b >= 0");
  int pad = n_max + a + b;
  Eigen::MatrixXcd X = position_matrix(pad).cast<std::complex<double>>();
  Eigen::MatrixXcd D = momentum_matrix(pad);

  Eigen::MatrixXcd Db = Eigen::MatrixXcd::Identity(pad + 1, pad + 1);
  for (int i = 0; i < b; ++i) Db = Db * D;

  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(pad + 1, pad + 1);
  double binom = 1.0;
  for (int k = 0; k <= a; ++k) {
    Eigen::MatrixXcd term = Db;
    for (int i = 0; i < k; ++i) term = X * term;
    for (int i = 0; i < a - k; ++i) term = term * X;
    acc += binom * term;
    binom = binom * (a - k) / (k + 1);
  }
  acc *= std::pow(2.0, -a);
  return acc.topLeftCorner(n_max + 1, n_max + 1);
}

}  // namespace isospec
