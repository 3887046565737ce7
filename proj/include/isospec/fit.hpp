#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "isospec/errors.hpp"

namespace isospec {

struct FitReport {
  double exponent = 0.0;
  double confidence_halfwidth = 0.0;  // ~2 standard errors of the slope
  std::pair<double, double> lambda_range{0.0, 0.0};
  int n_points = 0;
  std::string method;
};

std::vector<double> linear_spaced(double lo, double hi, int n);
std::vector<double> log_spaced(double lo, double hi, int n);

// Envelope points: maximum of |y| per window.  Windows are either fixed
// absolute width in x, or per-octave groups in log x.
struct EnvelopePoints {
  std::vector<double> x;
  std::vector<double> y;
};
EnvelopePoints envelope_absolute(const std::vector<double>& x, const std::vector<double>& y,
                                 double window_width);
EnvelopePoints envelope_per_octave(const std::vector<double>& x, const std::vector<double>& y,
                                   int windows_per_octave);

// Least-squares fit of log y = const + e log x.  Requires >= 8 points and
// positive magnitudes; throws PreconditionError otherwise.
FitReport fit_loglog(const EnvelopePoints& pts, const std::string& method);

// Least-squares coefficients of y ~ sum_k coeff_k x^{powers[k]}.
Eigen::VectorXd fit_power_basis(const std::vector<double>& x, const std::vector<double>& y,
                                const std::vector<double>& powers);

}  // namespace isospec
