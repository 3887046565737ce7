#include "isospec/counting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isospec/csv.hpp"
#include "isospec/parallel.hpp"

namespace isospec {

CountingFunction::CountingFunction(const SpectrumTable& table) : table_(&table) {
  table.validate();
  prefix_.resize(table.eigenvalues.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < table.eigenvalues.size(); ++i) {
    acc += table.multiplicities[i];
    prefix_[i] = acc;
  }
}

std::int64_t CountingFunction::operator()(double lambda) const {
  if (lambda > table_->lambda_trust) {
    std::ostringstream msg;
    msg << "counting at lambda=" << lambda << " above lambda_trust=" << table_->lambda_trust;
    throw TrustError(msg.str());
  }
  auto it = std::upper_bound(table_->eigenvalues.begin(), table_->eigenvalues.end(), lambda);
  auto idx = it - table_->eigenvalues.begin();
  return idx == 0 ? 0 : prefix_[idx - 1];
}

std::vector<double> mollified_counting(const SpectrumTable& table, const WindowSpec& rho,
                                       const std::vector<double>& grid) {
  table.validate();
  double width = rho.lambda_side_width();
  double gmax = grid.empty() ? 0.0 : *std::max_element(grid.begin(), grid.end());
  if (gmax > table.lambda_trust - 10.0 * width) {
    std::ostringstream msg;
    msg << "mollified_counting: grid max " << gmax << " exceeds lambda_trust - 10*width = "
        << table.lambda_trust - 10.0 * width;
    throw TrustError(msg.str());
  }
  std::int64_t total = table.total_count();
  // truncation: discarded tails below 1e-12 absolute per grid point
  double eps = 1e-13 / std::max<double>(1.0, double(total));
  double W = 0.0;
  if (rho.shape == WindowShape::Gaussian) {
    W = std::sqrt(2.0 * std::log(1.0 / eps)) / rho.sigma_t;
  } else {
    throw PreconditionError("mollified_counting: mollifier must be Gaussian (rho > 0)");
  }

  std::vector<std::int64_t> prefix(table.eigenvalues.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < table.eigenvalues.size(); ++i) {
    acc += table.multiplicities[i];
    prefix[i] = acc;
  }

  std::vector<double> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t gi) {
    double lam = grid[gi];
    auto lo = std::lower_bound(table.eigenvalues.begin(), table.eigenvalues.end(), lam - W);
    auto hi = std::upper_bound(table.eigenvalues.begin(), table.eigenvalues.end(), lam + W);
    std::size_t ilo = lo - table.eigenvalues.begin();
    std::size_t ihi = hi - table.eigenvalues.begin();
    double v = (ilo > 0) ? double(prefix[ilo - 1]) : 0.0;  // far-left eigenvalues count fully
    for (std::size_t i = ilo; i < ihi; ++i)
      v += double(table.multiplicities[i]) * rho.mollifier_cumulative(lam - table.eigenvalues[i]);
    out[gi] = v;
  });
  return out;
}

std::vector<double> tauberian_gap(const SpectrumTable& table, const WindowSpec& rho,
                                  const std::vector<double>& grid, int d) {
  CountingFunction N(table);
  std::vector<double> smooth = mollified_counting(table, rho, grid);
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out[i] = (double(N(grid[i])) - smooth[i]) / std::pow(grid[i], d - 1);
  return out;
}

std::string WeylTwoTermReport::to_csv() const {
  CsvWriter w({"lambda", "N", "weyl_main", "weyl_second", "remainder", "smoothed"});
  for (std::size_t i = 0; i < lambda.size(); ++i)
    w.row({lambda[i], counts[i], weyl_main[i], weyl_second[i], remainder[i],
           smoothed.empty() ? 0.0 : smoothed[i]});
  return w.str();
}

WeylTwoTermReport weyl_two_term_check(const SpectrumTable& table, const Symbol& s,
                                      const std::vector<double>& grid,
                                      const WindowSpec* rho_for_smoothed,
                                      int envelope_windows_per_octave) {
  if (grid.size() < 8) throw PreconditionError("weyl_two_term_check: grid too coarse");
  for (const auto& t : s.terms)
    if (t.degree == 0 && t.coeff != 0.0)
      throw PreconditionError("weyl_two_term_check: requires p0 = 0");
  if (!s.principal_is_oscillator)
    throw PreconditionError("weyl_two_term_check: principal part must be the oscillator");

  CountingFunction N(table);
  WeylTwoTermReport rep;
  rep.lambda = grid;
  rep.counts.resize(grid.size());
  rep.weyl_main.resize(grid.size());
  rep.weyl_second.assign(grid.size(), 0.0);
  rep.remainder.resize(grid.size());

  // cache sphere directions once; the boundary radius is a per-direction
  // scalar solve
  RadialQuadratureSpec rq;
  SphereGrid sphere = SphereGrid::make(s.d, rq.order_radial, rq.order_angular);
  std::vector<double> p2v(sphere.nodes.size()), p1v(sphere.nodes.size());
  for (std::size_t i = 0; i < sphere.nodes.size(); ++i) {
    PhasePoint p = PhasePoint::unpack(sphere.nodes[i]);
    p2v[i] = s.degree_part(2, p);
    p1v[i] = s.has_degree(1) ? s.degree_part(1, p) : 0.0;
    if (p2v[i] <= 0) throw PreconditionError("weyl_two_term_check: p2 not positive");
  }
  const double norm = std::pow(6.283185307179586477, -s.d);
  int twod = 2 * s.d;

  parallel_for(grid.size(), [&](std::size_t gi) {
    double lam = grid[gi];
    double acc = 0.0;
    for (std::size_t i = 0; i < sphere.nodes.size(); ++i) {
      double p2 = p2v[i], p1 = p1v[i];
      double lo = std::max(0.0, -p1 / (2.0 * p2));
      double hi = (std::abs(p1) + std::sqrt(p1 * p1 + 4.0 * p2 * lam)) / (2.0 * p2) + 1.0;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid * mid * p2 + mid * p1 < lam)
          lo = mid;
        else
          hi = mid;
        if (hi - lo < 1e-13 * std::max(1.0, hi)) break;
      }
      double r = 0.5 * (lo + hi);
      acc += sphere.weights[i] * std::pow(r, twod) / twod;
    }
    rep.weyl_main[gi] = norm * acc;
    rep.counts[gi] = double(N(lam));
    rep.remainder[gi] = rep.counts[gi] - rep.weyl_main[gi];
  });

  if (rho_for_smoothed) rep.smoothed = mollified_counting(table, *rho_for_smoothed, grid);

  EnvelopePoints env = envelope_per_octave(grid, rep.remainder, envelope_windows_per_octave);
  rep.remainder_fit = fit_loglog(env, "per-octave envelope of |N - V|");

  // lambda^{d-1/2} coefficient of lambda^d/d! - V(lambda)
  double dfact = 1.0;
  for (int k = 2; k <= s.d; ++k) dfact *= k;
  std::vector<double> diff(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    diff[i] = std::pow(grid[i], s.d) / dfact - rep.weyl_main[i];
  Eigen::VectorXd coeffs =
      fit_power_basis(grid, diff, {s.d - 0.5, double(s.d - 1), s.d - 1.5});
  rep.coeff_fitted = coeffs[0];
  rep.coeff_surface = surface_integral_p1(s, rq);
  double scale = std::max(std::abs(rep.coeff_surface), 1e-14);
  rep.coeff_rel_dev = std::abs(rep.coeff_fitted - rep.coeff_surface) / scale;
  return rep;
}

}  // namespace isospec
