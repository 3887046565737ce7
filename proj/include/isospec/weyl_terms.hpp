#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "isospec/symbol.hpp"

namespace isospec {

// Quadrature grid on the unit sphere S^{2d-1} (d = 1 or 2): nodes as packed
// unit vectors with weights summing to the sphere area.  d=1 uses the
// periodic trapezoid on S^1; d=2 uses torus-fiber coordinates on S^3
// (|z1|^2 = v, angles phi1, phi2), where the area measure is uniform in
// (v, phi1, phi2) and Gauss-Legendre x trapezoid^2 applies.
struct SphereGrid {
  std::vector<Eigen::VectorXd> nodes;
  std::vector<double> weights;
  static SphereGrid make(int d, int order_radial = 48, int order_angular = 32);
};

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;  // stderr for Monte Carlo, resolution delta for quadrature
};

struct MonteCarloSpec {
  std::uint64_t n = 1'000'000;
  std::uint64_t seed = 1;
};

struct RadialQuadratureSpec {
  int order_radial = 48;
  int order_angular = 32;
};

// (2 pi)^{-d} vol{ p2 + p1 <= lambda } for a symbol with degrees {2, 1} only.
// Radial route: solve r^2 p2(theta) + r p1(theta) = lambda per direction and
// integrate r^{2d}/(2d).  Checks the subordination bound |p1| <= C sqrt(p2)
// with C < sqrt(lambda) over the grid.
ValueWithError weyl_volume_radial(const Symbol& s, double lambda,
                                  const RadialQuadratureSpec& spec = {});

// Same phase-space volume by deterministic parallel Monte Carlo in a
// bounding ball (principal part must be the oscillator).  Fixed chunking
// makes the result independent of thread count.
ValueWithError weyl_volume_montecarlo(const Symbol& s, double lambda,
                                      const MonteCarloSpec& spec);

// (2 pi)^{-d} int_{p2 = 1} p1 dS / |grad p2|: the lambda^{d-1/2} coefficient
// of the two-term eigenvalue count enters with a minus sign.
double surface_integral_p1(const Symbol& s, const RadialQuadratureSpec& spec = {});

// (2 pi)^{-d} int_{p2 = lambda} p0 dS / |grad p2| (second Weyl term; zero
// when the symbol has no degree-0 part).
double surface_integral_p0(const Symbol& s, double lambda,
                           const RadialQuadratureSpec& spec = {});

// Boundary radius in direction theta (unit vector): the unique r > 0 with
// r^2 p2(theta) + r p1(theta) = lambda, found by bracketed bisection.
double boundary_radius(const Symbol& s, const Eigen::VectorXd& theta, double lambda);

}  // namespace isospec
