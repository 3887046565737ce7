#include "isospec/window.hpp"

#include <cmath>
#include <sstream>

namespace isospec {

namespace {
constexpr double kPi = 3.141592653589793238;
constexpr double kSqrt2Pi = 2.50662827463100050240;
}  // namespace

WindowSpec WindowSpec::gaussian(double sigma_t, double center) {
  if (!(sigma_t > 0)) throw PreconditionError("gaussian window: sigma_t > 0 required");
  WindowSpec w;
  w.shape = WindowShape::Gaussian;
  w.sigma_t = sigma_t;
  w.center_t = center;
  return w;
}

WindowSpec WindowSpec::hann(double half_width, double center) {
  if (!(half_width > 0)) throw PreconditionError("hann window: half_width > 0 required");
  WindowSpec w;
  w.shape = WindowShape::HannBump;
  w.half_width = half_width;
  w.center_t = center;
  return w;
}

double WindowSpec::centered_value(double s) const {
  switch (shape) {
    case WindowShape::Gaussian:
      return std::exp(-0.5 * s * s / (sigma_t * sigma_t));
    case WindowShape::HannBump: {
      if (std::abs(s) >= half_width) return 0.0;
      double c = std::cos(0.5 * kPi * s / half_width);
      return c * c;
    }
  }
  return 0.0;
}

double WindowSpec::transform(double omega) const {
  switch (shape) {
    case WindowShape::Gaussian:
      return sigma_t * kSqrt2Pi * std::exp(-0.5 * sigma_t * sigma_t * omega * omega);
    case WindowShape::HannBump: {
      // int_{-h}^{h} cos^2(pi s / 2h) e^{i s omega} ds
      //   = h sinc(omega h) / (1 - (omega h / pi)^2), even in omega
      double h = half_width;
      double x = std::abs(omega) * h;
      if (x < 1e-6) {
        double x2 = x * x;
        return h * (1.0 - x2 / 6.0) * (1.0 + x2 / (kPi * kPi));
      }
      if (std::abs(x - kPi) < 1e-3) {
        // removable singularity at omega h = +-pi
        double s = x - kPi;
        return h * kPi * kPi * (1.0 - s * s / 6.0) / ((kPi + s) * (2.0 * kPi + s));
      }
      return h * (std::sin(x) / x) / (1.0 - x * x / (kPi * kPi));
    }
  }
  return 0.0;
}

double WindowSpec::mass() const {
  switch (shape) {
    case WindowShape::Gaussian:
      return sigma_t * kSqrt2Pi;
    case WindowShape::HannBump:
      return half_width;
  }
  return 0.0;
}

double WindowSpec::tail_mass_outside(double halfwidth) const {
  switch (shape) {
    case WindowShape::Gaussian:
      return std::erfc(halfwidth / (sigma_t * std::sqrt(2.0)));
    case WindowShape::HannBump: {
      if (halfwidth >= half_width) return 0.0;
      // int_a^h cos^2(pi s/2h) ds / (h/2), two-sided over total mass h
      double a = halfwidth, h = half_width;
      double tail = (h - a) / 2.0 - (h / (2.0 * kPi)) * std::sin(kPi * a / h);
      return 2.0 * tail / h;
    }
  }
  return 1.0;
}

double WindowSpec::lambda_side_width() const {
  switch (shape) {
    case WindowShape::Gaussian:
      return 1.0 / sigma_t;
    case WindowShape::HannBump:
      return kPi / half_width;
  }
  return 0.0;
}

double WindowSpec::support_radius_lambda(double eps) const {
  if (!(eps > 0 && eps < 1)) throw PreconditionError("support_radius_lambda: eps in (0,1)");
  switch (shape) {
    case WindowShape::Gaussian:
      return std::sqrt(2.0 * std::log(1.0 / eps)) / sigma_t;
    case WindowShape::HannBump: {
      // |transform| <= pi^2 / (h^2 |w|^3) for large |w|; relative to mass h
      double h = half_width;
      return std::max(2.0 * kPi / h, std::cbrt(kPi * kPi / (h * h * h * eps)));
    }
  }
  return 0.0;
}

void WindowSpec::require_support_within(double budget, const std::string& what) const {
  double tail = tail_mass_outside(budget);
  if (tail > 1e-4) {
    std::ostringstream msg;
    msg << what << ": window leaks " << tail << " of its mass outside +-" << budget
        << " around its center (limit 1e-4)";
    throw PreconditionError(msg.str());
  }
}

double WindowSpec::mollifier_density(double u) const {
  if (shape != WindowShape::Gaussian)
    throw PreconditionError("mollifier requires the Gaussian window (positive transform)");
  // rho(u) = (1/2pi) int e^{i u t} chi(t) dt, normalized so int rho = chi(0) = 1
  double sl = 1.0 / sigma_t;  // lambda-side std
  return std::exp(-0.5 * u * u / (sl * sl)) / (sl * kSqrt2Pi);
}

double WindowSpec::mollifier_cumulative(double u) const {
  if (shape != WindowShape::Gaussian)
    throw PreconditionError("mollifier requires the Gaussian window (positive transform)");
  double sl = 1.0 / sigma_t;
  return 0.5 * std::erfc(-u / (sl * std::sqrt(2.0)));
}

std::string WindowSpec::describe() const {
  std::ostringstream s;
  if (shape == WindowShape::Gaussian)
    s << "gaussian(sigma_t=" << sigma_t << ")";
  else
    s << "hann_bump(half_width=" << half_width << ")";
  s << " @ t=" << center_t;
  return s.str();
}

}  // namespace isospec
