#include "isospec/trace_transform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isospec/csv.hpp"
#include "isospec/parallel.hpp"

namespace isospec {

namespace {
constexpr double kTwoPi = 6.283185307179586477;
}

std::string TraceTransform::to_csv() const {
  CsvWriter w({"lambda", "re", "im", "abs"});
  for (std::size_t i = 0; i < lambda_grid.size(); ++i)
    w.row({lambda_grid[i], values[i].real(), values[i].imag(), std::abs(values[i])});
  return w.str();
}

TraceTransform windowed_transform(const SpectrumTable& table, const WindowSpec& window,
                                  const std::vector<double>& grid, double support_budget) {
  table.validate();
  if (grid.empty()) throw PreconditionError("windowed_transform: empty grid");
  window.require_support_within(support_budget, "windowed_transform");
  double gmax = *std::max_element(grid.begin(), grid.end());
  double width = window.lambda_side_width();
  if (gmax > table.lambda_trust - 10.0 * width) {
    std::ostringstream msg;
    msg << "windowed_transform: grid max " << gmax << " exceeds lambda_trust - 10*width = "
        << table.lambda_trust - 10.0 * width;
    throw TrustError(msg.str());
  }

  // per-point relative tail truncation below 1e-12
  double eps = 1e-14 / std::max<double>(1.0, double(table.total_count()));
  double W = window.support_radius_lambda(eps);
  double tc = window.center_t;

  TraceTransform out;
  out.window = window;
  out.lambda_grid = grid;
  out.values.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t gi) {
    double lam = grid[gi];
    auto lo = std::lower_bound(table.eigenvalues.begin(), table.eigenvalues.end(), lam - W);
    auto hi = std::upper_bound(table.eigenvalues.begin(), table.eigenvalues.end(), lam + W);
    std::complex<double> acc(0.0, 0.0);
    for (auto it = lo; it != hi; ++it) {
      std::size_t i = it - table.eigenvalues.begin();
      double delta = lam - table.eigenvalues[i];
      double amp = double(table.multiplicities[i]) * window.transform(delta);
      acc += std::polar(amp, tc * delta);
    }
    out.values[gi] = acc / kTwoPi;
  });
  return out;
}

TraceTransform trace_transform(const SpectrumTable& table, int n, WindowSpec window,
                               const std::vector<double>& grid) {
  window.center_t = kTwoPi * n;
  TraceTransform out = windowed_transform(table, window, grid, 0.5 * 3.141592653589793238);
  out.n = n;
  return out;
}

FitReport singularity_exponent(const TraceTransform& tt, double envelope_width) {
  if (tt.lambda_grid.empty()) throw PreconditionError("singularity_exponent: empty transform");
  std::vector<double> mag(tt.values.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < tt.values.size(); ++i) {
    mag[i] = std::abs(tt.values[i]);
    peak = std::max(peak, mag[i]);
  }
  if (peak == 0.0) throw PreconditionError("singularity_exponent: transform vanishes identically");
  EnvelopePoints env = envelope_absolute(tt.lambda_grid, mag, envelope_width);
  return fit_loglog(env, "width-" + std::to_string(envelope_width) + " envelope of |I|");
}

std::vector<double> anchored_grid(double lambda_min, double lambda_max, int anchors,
                                  int subsamples, double width) {
  if (anchors < 8) throw PreconditionError("anchored_grid: need >= 8 dyadic anchors");
  if (subsamples < 3) throw PreconditionError("anchored_grid: need >= 3 subsamples");
  std::vector<double> centers = log_spaced(lambda_min, lambda_max, anchors);
  std::vector<double> grid;
  grid.reserve(std::size_t(anchors) * subsamples);
  for (double c : centers)
    for (int k = 0; k < subsamples; ++k)
      grid.push_back(c - 0.5 * width + width * k / (subsamples - 1));
  return grid;
}

}  // namespace isospec
