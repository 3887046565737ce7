#pragma once

#include <complex>

#include <Eigen/Dense>

#include "isospec/errors.hpp"

namespace isospec {

// Closed-form Schwartz kernel of the free oscillator propagator at time t:
//   K(t,x,y) = (2 pi |sin t|)^{-d/2} e^{-i (pi d / 4)(1 + 2 floor(t/pi))}
//              exp( i [ (|x|^2+|y|^2) cos t - 2 <x,y> ] / (2 sin t) ).
// The phase factor continues the branch across t = m pi, and reduces to the
// alternating-sign form on t - 2 pi n in (-pi/2, pi/2).
// Domain: dist(t, pi Z) > 1e-6 and dist(t, 2 pi Z +- pi/2) > 1e-6.
std::complex<double> mehler_kernel(double t, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// d=1 group-law composition int K(t1,x,z) K(t2,z,y) dz evaluated exactly as
// a complex Gaussian integral with analytic damping e^{-z^2/2L^2} and
// Richardson extrapolation in L (damping error is O(1/L^2)).
std::complex<double> mehler_compose_1d(double t1, double t2, double x, double y,
                                       double damp_scale = 64.0);

}  // namespace isospec
