#pragma once

#include <vector>

#include "isospec/fit.hpp"
#include "isospec/spectrum_table.hpp"
#include "isospec/symbol.hpp"
#include "isospec/weyl_terms.hpp"
#include "isospec/window.hpp"

namespace isospec {

// Eigenvalue counting with precomputed prefix sums.  N(lambda) counts the
// closed interval (-infty, lambda]; right-continuous step function.
class CountingFunction {
 public:
  explicit CountingFunction(const SpectrumTable& table);
  std::int64_t operator()(double lambda) const;  // TrustError above lambda_trust
  const SpectrumTable& table() const { return *table_; }

 private:
  const SpectrumTable* table_;
  std::vector<std::int64_t> prefix_;
};

// (N * rho)(lambda) on a grid: sum of multiplicity-weighted mollifier
// cumulatives, far tails truncated below 1e-12 absolute per point.
// Precondition: grid max <= lambda_trust - 10 * (lambda-side width of rho).
std::vector<double> mollified_counting(const SpectrumTable& table, const WindowSpec& rho,
                                       const std::vector<double>& grid);

// (N(lambda) - (N * rho)(lambda)) / lambda^{d-1}
std::vector<double> tauberian_gap(const SpectrumTable& table, const WindowSpec& rho,
                                  const std::vector<double>& grid, int d);

struct WeylTwoTermReport {
  FitReport remainder_fit;     // envelope exponent of |N - V|
  double coeff_fitted = 0.0;   // lambda^{d-1/2} coefficient of (lambda^d/d! - V)
  double coeff_surface = 0.0;  // surface_integral_p1
  double coeff_rel_dev = 0.0;
  std::vector<double> lambda, counts, weyl_main, weyl_second, remainder, smoothed;
  std::string to_csv() const;  // lambda,N,weyl_main,weyl_second,remainder,smoothed
};

// Two-term eigenvalue-count comparison: R(lambda) = N(lambda) - V(lambda)
// with V the phase-space volume term; fits the remainder envelope exponent
// per octave and cross-checks the lambda^{d-1/2} coefficient against the
// surface integral of p1.  Requires p0 = 0 and >= 8 envelope windows.
WeylTwoTermReport weyl_two_term_check(const SpectrumTable& table, const Symbol& s,
                                      const std::vector<double>& grid,
                                      const WindowSpec* rho_for_smoothed = nullptr,
                                      int envelope_windows_per_octave = 2);

}  // namespace isospec
