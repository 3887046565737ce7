#include "isospec/fit.hpp"

#include <algorithm>
#include <cmath>

namespace isospec {

std::vector<double> linear_spaced(double lo, double hi, int n) {
  if (n < 2 || !(hi > lo)) throw PreconditionError("linear_spaced: need n >= 2 and hi > lo");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  if (n < 2 || !(hi > lo) || lo <= 0) throw PreconditionError("log_spaced: need n >= 2, hi > lo > 0");
  std::vector<double> out(n);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) out[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return out;
}

EnvelopePoints envelope_absolute(const std::vector<double>& x, const std::vector<double>& y,
                                 double window_width) {
  if (x.size() != y.size() || x.empty()) throw PreconditionError("envelope: bad input");
  EnvelopePoints pts;
  double lo = *std::min_element(x.begin(), x.end());
  std::vector<std::pair<double, double>> best;  // per window: (x_at_max, max)
  std::vector<long> widx(x.size());
  long maxw = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    widx[i] = long((x[i] - lo) / window_width);
    maxw = std::max(maxw, widx[i]);
  }
  best.assign(maxw + 1, {0.0, -1.0});
  for (std::size_t i = 0; i < x.size(); ++i) {
    double m = std::abs(y[i]);
    if (m > best[widx[i]].second) best[widx[i]] = {x[i], m};
  }
  for (const auto& [bx, bm] : best) {
    if (bm >= 0) {
      pts.x.push_back(bx);
      pts.y.push_back(bm);
    }
  }
  return pts;
}

EnvelopePoints envelope_per_octave(const std::vector<double>& x, const std::vector<double>& y,
                                   int windows_per_octave) {
  if (x.size() != y.size() || x.empty()) throw PreconditionError("envelope: bad input");
  double lo = *std::min_element(x.begin(), x.end());
  const double ln2 = 0.69314718055994530942;
  EnvelopePoints pts;
  std::vector<std::pair<double, double>> best;
  std::vector<long> widx(x.size());
  long maxw = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    widx[i] = long(std::log(x[i] / lo) / ln2 * windows_per_octave);
    maxw = std::max(maxw, widx[i]);
  }
  best.assign(maxw + 1, {0.0, -1.0});
  for (std::size_t i = 0; i < x.size(); ++i) {
    double m = std::abs(y[i]);
    if (m > best[widx[i]].second) best[widx[i]] = {x[i], m};
  }
  for (const auto& [bx, bm] : best) {
    if (bm >= 0) {
      pts.x.push_back(bx);
      pts.y.push_back(bm);
    }
  }
  return pts;
}

FitReport fit_loglog(const EnvelopePoints& pts, const std::string& method) {
  int n = int(pts.x.size());
  if (n < 8) throw PreconditionError("fit_loglog: need >= 8 envelope points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  double xmin = 1e300, xmax = -1e300;
  std::vector<double> lx, ly;
  for (int i = 0; i < n; ++i) {
    if (!(pts.y[i] > 0)) continue;
    double a = std::log(pts.x[i]), b = std::log(pts.y[i]);
    lx.push_back(a);
    ly.push_back(b);
    sx += a;
    sy += b;
    sxx += a * a;
    sxy += a * b;
    ++used;
    xmin = std::min(xmin, pts.x[i]);
    xmax = std::max(xmax, pts.x[i]);
  }
  if (used < 8) throw PreconditionError("fit_loglog: fewer than 8 positive envelope points");
  double denom = used * sxx - sx * sx;
  if (denom <= 0) throw PreconditionError("fit_loglog: degenerate abscissae");
  double slope = (used * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / used;
  double ss = 0;
  for (int i = 0; i < used; ++i) {
    double r = ly[i] - (intercept + slope * lx[i]);
    ss += r * r;
  }
  double var_slope = (used > 2) ? (ss / (used - 2)) * (used / denom) : 0.0;
  FitReport rep;
  rep.exponent = slope;
  rep.confidence_halfwidth = 2.0 * std::sqrt(std::max(var_slope, 0.0));
  rep.lambda_range = {xmin, xmax};
  rep.n_points = used;
  rep.method = method;
  return rep;
}

Eigen::VectorXd fit_power_basis(const std::vector<double>& x, const std::vector<double>& y,
                                const std::vector<double>& powers) {
  int n = int(x.size()), k = int(powers.size());
  if (n < k) throw PreconditionError("fit_power_basis: underdetermined");
  Eigen::MatrixXd A(n, k);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) A(i, j) = std::pow(x[i], powers[j]);
    b[i] = y[i];
  }
  return A.colPivHouseholderQr().solve(b);
}

}  // namespace isospec
