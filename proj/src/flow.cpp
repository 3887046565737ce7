#include "isospec/flow.hpp"

#include <cmath>
#include <sstream>

namespace isospec {

PhasePoint harmonic_flow(const PhasePoint& p, double t) {
  double c = std::cos(t);
  double s = std::sin(t);
  return PhasePoint{c * p.x + s * p.xi, c * p.xi - s * p.x};
}

double xray_average(const PhaseFunction& f, const PhasePoint& p, int quadrature_order) {
  if (quadrature_order < 4) throw PreconditionError("xray_average: quadrature_order must be >= 4");
  const double two_pi = 6.283185307179586477;
  double h = two_pi / quadrature_order;
  double acc = 0.0;
  for (int k = 0; k < quadrature_order; ++k) {
    double t = k * h;
    double v = f(harmonic_flow(p, t));
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "xray_average: non-finite integrand at t=" << t;
      throw NumericalError(msg.str());
    }
    acc += v;
  }
  return acc * h;
}

}  // namespace isospec
