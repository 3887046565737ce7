#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "isospec/errors.hpp"

namespace isospec {

// p(j, d) = binomial(d+j-1, j): dimension of the j-th oscillator eigenspace
// in d variables.  Exact integer arithmetic; throws on overflow or negative
// input.
std::uint64_t multiplicity(std::int64_t j, std::int64_t d);

// Multi-indices alpha with |alpha| = level, in lexicographic order.
std::vector<Eigen::VectorXi> level_multi_indices(int level, int d);
// All |alpha| <= max_level, level by level (lexicographic inside a level).
std::vector<Eigen::VectorXi> multi_indices_up_to(int max_level, int d);

// Normalized Hermite functions psi_0..psi_n at x (stable recurrence).
Eigen::VectorXd hermite_functions(int n, double x);
// Entire continuation psi_n(w) for complex w (same recurrence).
Eigen::VectorXcd hermite_functions(int n, std::complex<double> w);

// Gauss-Hermite rule for weight e^{-x^2} on R (Golub-Welsch).
struct GaussHermite {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  static GaussHermite make(int order);
};

}  // namespace isospec
