#pragma once

#include <functional>

#include <Eigen/Dense>

#include "isospec/errors.hpp"

namespace isospec {

// A point (x, xi) of phase space R^d x R^d.
struct PhasePoint {
  Eigen::VectorXd x;
  Eigen::VectorXd xi;

  int dim() const { return int(x.size()); }

  Eigen::VectorXd packed() const {
    Eigen::VectorXd w(2 * x.size());
    w << x, xi;
    return w;
  }
  static PhasePoint unpack(const Eigen::VectorXd& w) {
    int d = int(w.size()) / 2;
    return PhasePoint{w.head(d), w.tail(d)};
  }
  double norm() const { return std::sqrt(x.squaredNorm() + xi.squaredNorm()); }
};

using PhaseFunction = std::function<double(const PhasePoint&)>;

// Harmonic flow: rotation by angle t in every (x_j, xi_j) plane, period 2*pi.
PhasePoint harmonic_flow(const PhasePoint& p, double t);

// p2 = (|x|^2 + |xi|^2)/2, the oscillator Hamiltonian.
inline double oscillator_energy(const PhasePoint& p) {
  return 0.5 * (p.x.squaredNorm() + p.xi.squaredNorm());
}

// Integral of f over one flow period, int_0^{2pi} f(flow(t) p) dt, by the
// periodic trapezoid rule.  Spectrally accurate for smooth f.
// Throws NumericalError (with the offending t) on a non-finite sample.
double xray_average(const PhaseFunction& f, const PhasePoint& p, int quadrature_order = 256);

}  // namespace isospec
