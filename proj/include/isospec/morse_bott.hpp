#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "isospec/symbol.hpp"

namespace isospec {

struct CriticalManifold {
  std::vector<Eigen::VectorXd> representative_points;  // unit vectors on S^{2d-1}
  int dimension = 1;      // includes the flow circle direction
  int hessian_rank = 0;   // rank transverse to the manifold (flow direction excluded)
  double value = 0.0;     // value of Xf on the manifold
  int basin_size = 0;     // how many starts converged here
};

struct MorseBottReport {
  std::vector<CriticalManifold> manifolds;
  int k_min = 0;
  bool is_morse_bott = false;
  bool flat_set_detected = false;

  // diagnostics
  int n_starts = 0;
  int n_converged = 0;
  double flat_fraction = 0.0;
  bool diagnostic_failure = false;  // > 1% of starts failed to converge
  std::string message;
};

// Locates the critical manifolds of Xf (the flow average of f) restricted to
// S^{2d-1} by multi-start damped Newton from quasi-random seeded starts,
// groups the converged points into manifolds, and measures the transverse
// Hessian rank of each.  The flow direction is a known null direction of Xf
// and is excluded from the rank count.
MorseBottReport classify_morse_bott(const HomogeneousTerm& f, int d, int samples,
                                    std::uint64_t seed);

// Flow vector field of the oscillator Hamiltonian at packed w = (x, xi).
Eigen::VectorXd flow_direction(const Eigen::VectorXd& w);

}  // namespace isospec
