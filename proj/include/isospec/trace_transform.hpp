#pragma once

#include <complex>
#include <string>
#include <vector>

#include "isospec/fit.hpp"
#include "isospec/spectrum_table.hpp"
#include "isospec/window.hpp"

namespace isospec {

// I(lambda) = (1/2pi) int e^{i t lambda} chi(t - t_c) Tr U(t) dt for the
// spectral sum Tr U(t) = sum_j m_j e^{-i t lambda_j}; by the Fourier shift
// identity this is (1/2pi) sum_j m_j e^{i t_c (lambda - lambda_j)}
// C-hat(lambda - lambda_j).
struct TraceTransform {
  int n = 0;  // singularity index when centered at 2 pi n, else 0
  WindowSpec window;
  std::vector<double> lambda_grid;
  std::vector<std::complex<double>> values;

  std::string to_csv() const;  // lambda,re,im,abs
};

// General window center (used for probing away from 2 pi Z).
// support_budget: the window must hold all but 1e-4 of its mass within
// (center - budget, center + budget).
TraceTransform windowed_transform(const SpectrumTable& table, const WindowSpec& window,
                                  const std::vector<double>& grid,
                                  double support_budget);

// Window centered at t0 = 2 pi n (window.center_t is overridden).
TraceTransform trace_transform(const SpectrumTable& table, int n, WindowSpec window,
                               const std::vector<double>& grid);

// Envelope log-log fit of |I(lambda)| with absolute windows of the natural
// cluster spacing (width 1 by default).
FitReport singularity_exponent(const TraceTransform& tt, double envelope_width = 1.0);

// Dyadic anchor points with a local scan of each width-`width` window:
// returns the flattened grid used for envelope measurements.
std::vector<double> anchored_grid(double lambda_min, double lambda_max, int anchors,
                                  int subsamples = 17, double width = 1.0);

}  // namespace isospec
