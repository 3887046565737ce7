#pragma once

#include <vector>

#include <Eigen/Dense>

#include "isospec/errors.hpp"

namespace isospec {

struct ShiftReport {
  std::vector<int> n_list;
  std::vector<Eigen::VectorXd> measured;   // centroid displacement after U(2 pi n)
  std::vector<Eigen::VectorXd> predicted;  // n * grad_xi (X p1)(0, xi0)
  double max_rel_dev = 0.0;                // worst |measured - predicted| / |predicted|
  double linearity_dev = 0.0;              // worst |m(n)/n - m(1)| / |m(1)|
  double mass_retained = 0.0;
};

// Evolves a Gaussian wavepacket of the given width centered at (x=0, xi0)
// through U(2 pi n) in the diagonal model with Hopf coefficients c, by exact
// eigenexpansion, and compares the position-centroid displacement with the
// flow-average prediction.  Throws NumericalError if more than 1e-6 of the
// packet mass leaks past the retained basis.
ShiftReport wavepacket_shift(const Eigen::VectorXd& c, const std::vector<int>& n_list,
                             const Eigen::VectorXd& xi0, double width);

}  // namespace isospec
