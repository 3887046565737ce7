#include "isospec/hermite.hpp"

#include <cmath>

namespace isospec {

std::uint64_t multiplicity(std::int64_t j, std::int64_t d) {
  if (j < 0 || d < 1) throw PreconditionError("multiplicity: need j >= 0, d >= 1");
  // binomial(d+j-1, d-1) with the small top index, multiply/divide in order
  std::int64_t k = d - 1;
  if (k == 0) return 1;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * (unsigned __int128)(j + i);
    acc /= (unsigned __int128)i;  // exact: product of i consecutive integers
    if (acc > (unsigned __int128)UINT64_MAX) throw PreconditionError("multiplicity: overflow");
  }
  return (std::uint64_t)acc;
}

namespace {
void fill_level(int level, int d, int pos, Eigen::VectorXi& cur,
                std::vector<Eigen::VectorXi>& out) {
  if (pos == d - 1) {
    cur[pos] = level;
    out.push_back(cur);
    return;
  }
  for (int a = 0; a <= level; ++a) {
    cur[pos] = a;
    fill_level(level - a, d, pos + 1, cur, out);
  }
}
}  // namespace

std::vector<Eigen::VectorXi> level_multi_indices(int level, int d) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi cur(d);
  fill_level(level, d, 0, cur, out);
  return out;
}

std::vector<Eigen::VectorXi> multi_indices_up_to(int max_level, int d) {
  std::vector<Eigen::VectorXi> out;
  for (int n = 0; n <= max_level; ++n) {
    auto lvl = level_multi_indices(n, d);
    out.insert(out.end(), lvl.begin(), lvl.end());
  }
  return out;
}

Eigen::VectorXd hermite_functions(int n, double x) {
  Eigen::VectorXd psi(n + 1);
  const double pi_m14 = 0.75112554446494248286;  // pi^{-1/4}
  psi[0] = pi_m14 * std::exp(-0.5 * x * x);
  if (n == 0) return psi;
  psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int k = 1; k < n; ++k)
    psi[k + 1] = std::sqrt(2.0 / (k + 1)) * x * psi[k] - std::sqrt(double(k) / (k + 1)) * psi[k - 1];
  return psi;
}

Eigen::VectorXcd hermite_functions(int n, std::complex<double> w) {
  Eigen::VectorXcd psi(n + 1);
  const double pi_m14 = 0.75112554446494248286;
  psi[0] = pi_m14 * std::exp(-0.5 * w * w);
  if (n == 0) return psi;
  psi[1] = std::sqrt(2.0) * w * psi[0];
  for (int k = 1; k < n; ++k)
    psi[k + 1] = std::sqrt(2.0 / (k + 1)) * w * psi[k] - std::sqrt(double(k) / (k + 1)) * psi[k - 1];
  return psi;
}

GaussHermite GaussHermite::make(int order) {
  if (order < 1) throw PreconditionError("GaussHermite: order >= 1");
  // nodes from the Jacobi matrix of the weight e^{-x^2}; eigenvalues are
  // accurate, but eigenvector-based weights collapse at the edge for large
  // order, so the weights come from the Christoffel sum instead
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    double b = std::sqrt(0.5 * k);
    jac(k - 1, k) = b;
    jac(k, k - 1) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac, Eigen::EigenvaluesOnly);
  GaussHermite gh;
  gh.nodes = es.eigenvalues();
  gh.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = gh.nodes[i];
    // Newton polish on psi_order(x) = 0, using psi' = sqrt(2n) psi_{n-1} - x psi
    for (int it = 0; it < 4; ++it) {
      Eigen::VectorXd psi = hermite_functions(order, x);
      double deriv = std::sqrt(2.0 * order) * psi[order - 1] - x * psi[order];
      if (deriv == 0.0) break;
      double dx = psi[order] / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    gh.nodes[i] = x;
    // w_i e^{x_i^2} = 1 / sum_{k<order} psi_k(x_i)^2
    Eigen::VectorXd psi = hermite_functions(order - 1, x);
    double s = psi.squaredNorm();
    gh.weights[i] = std::exp(-x * x) / s;
  }
  return gh;
}

}  // namespace isospec
