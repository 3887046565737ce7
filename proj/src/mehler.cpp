#include "isospec/mehler.hpp"

#include <cmath>
#include <sstream>

namespace isospec {

namespace {
constexpr double kPi = 3.141592653589793238;
constexpr double kTwoPi = 6.283185307179586477;

double dist_to_multiples(double t, double period) {
  double r = std::remainder(t, period);
  return std::abs(r);
}
}  // namespace

std::complex<double> mehler_kernel(double t, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size() || x.size() < 1) throw PreconditionError("mehler_kernel: dimension mismatch");
  int d = int(x.size());
  if (dist_to_multiples(t, kPi) < 1e-6)
    throw PreconditionError("mehler_kernel: t within 1e-6 of pi Z (kernel is distributional)");
  double q = std::remainder(t, kTwoPi);  // in (-pi, pi]
  if (std::abs(std::abs(q) - 0.5 * kPi) < 1e-6)
    throw PreconditionError("mehler_kernel: t within 1e-6 of 2 pi Z +- pi/2");

  double s = std::sin(t), c = std::cos(t);
  double m = std::floor(t / kPi);
  double pref = std::pow(kTwoPi * std::abs(s), -0.5 * d);
  double maslov = -0.25 * kPi * d * (1.0 + 2.0 * m);
  double phase = ((x.squaredNorm() + y.squaredNorm()) * c - 2.0 * x.dot(y)) / (2.0 * s);
  return std::polar(pref, phase + maslov);
}

std::complex<double> mehler_compose_1d(double t1, double t2, double x, double y,
                                       double damp_scale) {
  // K(t1,x,z) K(t2,z,y) = P exp(i(a z^2 + b z + c)) with
  //   a = (cot t1 + cot t2)/2, b = -x/sin t1 - y/sin t2,
  //   c = x^2 cot t1 / 2 + y^2 cot t2 / 2 + maslov terms inside P.
  auto one = [&](double L) {
    double s1 = std::sin(t1), s2 = std::sin(t2);
    double a = 0.5 * (std::cos(t1) / s1 + std::cos(t2) / s2);
    double b = -x / s1 - y / s2;
    double m1 = std::floor(t1 / kPi), m2 = std::floor(t2 / kPi);
    double pref = std::pow(kTwoPi * std::abs(s1), -0.5) * std::pow(kTwoPi * std::abs(s2), -0.5);
    double cphase = 0.5 * x * x * std::cos(t1) / s1 + 0.5 * y * y * std::cos(t2) / s2 -
                    0.25 * kPi * (2.0 + 2.0 * (m1 + m2));
    // int exp(-A z^2 + i b z) dz with A = 1/(2L^2) - i a, Re A > 0
    std::complex<double> A(0.5 / (L * L), -a);
    std::complex<double> gauss = std::sqrt(kPi / A) * std::exp(-b * b / (4.0 * A));
    return pref * std::polar(1.0, cphase) * gauss;
  };
  // damping error is O(1/L^2): eliminate the leading term
  std::complex<double> f1 = one(damp_scale);
  std::complex<double> f2 = one(damp_scale * std::sqrt(2.0));
  return 2.0 * f2 - f1;
}

}  // namespace isospec
