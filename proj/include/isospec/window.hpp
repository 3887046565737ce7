#pragma once

#include <string>

#include "isospec/errors.hpp"

namespace isospec {

enum class WindowShape { Gaussian, HannBump };

// A time-domain window chi (or mollifier rho) with analytically known
// Fourier transform.  The Gaussian stands in for a compactly supported
// bump: with sigma_t = pi/8 its value at the nearest foreign trace
// singularity (distance >= 3 pi/2 from center) is below 1e-31, which is
// compact support at double precision.  The Hann bump is exactly supported
// on [center - half_width, center + half_width].
struct WindowSpec {
  WindowShape shape = WindowShape::Gaussian;
  double sigma_t = 0.0;      // Gaussian
  double half_width = 0.0;   // HannBump
  double center_t = 0.0;

  static WindowSpec gaussian(double sigma_t, double center = 0.0);
  static WindowSpec hann(double half_width, double center = 0.0);

  double centered_value(double s) const;            // shape at offset s, peak 1
  double value(double t) const { return centered_value(t - center_t); }

  // Fourier transform of the centered shape, int e^{i s w} C(s) ds (real, even).
  double transform(double omega) const;
  double mass() const;                              // transform(0)
  double tail_mass_outside(double halfwidth) const; // fraction of mass
  double lambda_side_width() const;                 // scale of transform decay

  // smallest W with |transform| / mass < eps outside |omega| > W
  double support_radius_lambda(double eps) const;

  // Enforce that the window is effectively supported in
  // (center - budget, center + budget): relative tail mass below 1e-4.
  void require_support_within(double budget, const std::string& what) const;

  // Mollifier view (Gaussian only): rho(u) with int rho = 1 and
  // rho-hat(t) = centered_value(t); cumulative is an error function.
  double mollifier_density(double u) const;
  double mollifier_cumulative(double u) const;

  std::string describe() const;
};

}  // namespace isospec
