#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "isospec/counting.hpp"
#include "isospec/rng.hpp"

using namespace isospec;

namespace {
constexpr double kPi = 3.141592653589793238;

SpectrumTable toy_table(std::vector<std::pair<double, std::int64_t>> raw, double trust) {
  return SpectrumTable::from_raw(std::move(raw), trust, "toy");
}
}  // namespace

TEST_CASE("counting: steps, closed interval, monotonicity") {
  SpectrumTable t = toy_table({{1.0, 2}, {2.5, 1}, {4.0, 3}}, 4.0);
  CountingFunction N(t);
  CHECK(N(0.5) == 0);
  CHECK(N(1.0) == 2);   // eigenvalue included at lambda exactly
  CHECK(N(2.4999) == 2);
  CHECK(N(2.5) == 3);
  CHECK(N(4.0) == 6);
  CHECK_THROWS_AS(N(4.5), TrustError);
  // jump at lambda_j equals its multiplicity
  CHECK(N(1.0) - N(1.0 - 1e-9) == 2);
}

TEST_CASE("counting matches the d=2 enumeration example") {
  SpectrumTable t = oscillator_spectrum(2, 10.5);
  CountingFunction N(t);
  CHECK(N(10.5) == 55);
}

TEST_CASE("mollified counting: single eigenvalue gives the cumulative") {
  SpectrumTable t = toy_table({{0.0, 1}}, 1000.0);
  WindowSpec rho = WindowSpec::gaussian(kPi / 8.0);
  std::vector<double> grid = {-5.0, -1.0, 0.0, 1.0, 5.0};
  auto vals = mollified_counting(t, rho, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(vals[i] == doctest::Approx(rho.mollifier_cumulative(grid[i])).epsilon(1e-12));
  CHECK(vals[2] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("mollified counting: smooth, strictly increasing, additive") {
  SpectrumTable t = toy_table({{3.0, 1}, {5.0, 2}, {6.0, 1}}, 1000.0);
  WindowSpec rho = WindowSpec::gaussian(kPi / 8.0);
  std::vector<double> grid = linear_spaced(0.0, 9.0, 200);
  auto vals = mollified_counting(t, rho, grid);
  for (std::size_t i = 1; i < vals.size(); ++i) CHECK(vals[i] > vals[i - 1]);

  // additivity under disjoint union, for both the counting function and its
  // mollification
  SpectrumTable a = toy_table({{3.0, 1}}, 1000.0);
  SpectrumTable b = toy_table({{5.0, 2}, {6.0, 1}}, 1000.0);
  auto va = mollified_counting(a, rho, grid);
  auto vb = mollified_counting(b, rho, grid);
  CountingFunction Nab(t), Na(a), Nb(b);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(vals[i] == doctest::Approx(va[i] + vb[i]).epsilon(1e-12));
    CHECK(Nab(grid[i]) == Na(grid[i]) + Nb(grid[i]));
  }
}

TEST_CASE("mollified counting converges to N as the width shrinks") {
  SpectrumTable t = toy_table({{2.0, 1}, {4.0, 2}, {7.0, 1}}, 1000.0);
  CountingFunction N(t);
  // at continuity points of N
  for (double lam : {3.0, 5.5, 8.0}) {
    double prev_err = 1e9;
    for (double sig : {0.5, 2.0, 8.0}) {  // sigma_t; lambda width = 1/sigma_t
      WindowSpec rho = WindowSpec::gaussian(sig);
      auto v = mollified_counting(t, rho, {lam});
      double err = std::abs(v[0] - double(N(lam)));
      CHECK(err <= prev_err + 1e-12);
      prev_err = err;
    }
    CHECK(prev_err < 1e-10);
  }
}

TEST_CASE("mollified counting enforces the trust margin") {
  SpectrumTable t = toy_table({{2.0, 1}}, 10.0);
  WindowSpec rho = WindowSpec::gaussian(kPi / 8.0);
  CHECK_THROWS_AS(mollified_counting(t, rho, {9.0}), TrustError);
}

TEST_CASE("d=1 oscillator: (N * rho)(lambda) - lambda stays bounded") {
  SpectrumTable t = oscillator_spectrum(1, 500.0);
  WindowSpec rho = WindowSpec::gaussian(kPi / 8.0);
  std::vector<double> grid = linear_spaced(20.0, 450.0, 300);
  auto vals = mollified_counting(t, rho, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(std::abs(vals[i] - grid[i]) < 2.0);
}

TEST_CASE("tauberian gap: single eigenvalue bounded by 1") {
  SpectrumTable t = toy_table({{5.0, 1}}, 1000.0);
  WindowSpec rho = WindowSpec::gaussian(kPi / 8.0);
  std::vector<double> grid = linear_spaced(1.0, 20.0, 100);
  auto gap = tauberian_gap(t, rho, grid, 1);
  for (double g : gap) CHECK(std::abs(g) <= 1.0 + 1e-9);
}

TEST_CASE("tauberian gap: oscillator bounded but not decaying; hopf decays") {
  WindowSpec rho = WindowSpec::gaussian(kPi / 8.0);
  std::vector<double> grid = log_spaced(100.0, 800.0, 96);

  SpectrumTable osc = oscillator_spectrum(2, 900.0);
  auto gap_osc = tauberian_gap(osc, rho, grid, 2);
  double osc_first = 0, osc_last = 0;
  for (int i = 0; i < 24; ++i) {
    osc_first += std::abs(gap_osc[i]) / 24.0;
    osc_last += std::abs(gap_osc[gap_osc.size() - 1 - i]) / 24.0;
  }
  CHECK(osc_last <= 2.0 * osc_first);
  CHECK(osc_last >= 0.2 * osc_first);

  SpectrumTable hopf = diagonal_model_spectrum(Eigen::Vector2d(0.3, 0.7), 900.0);
  auto gap_hopf = tauberian_gap(hopf, rho, grid, 2);
  double h_first = 0, h_last = 0;
  for (int i = 0; i < 24; ++i) {
    h_first += std::abs(gap_hopf[i]) / 24.0;
    h_last += std::abs(gap_hopf[gap_hopf.size() - 1 - i]) / 24.0;
  }
  CHECK(h_last < h_first);
}

TEST_CASE("mollified count tracks the phase-space volume within O(sqrt(lambda))") {
  Eigen::Vector2d c(0.3, 0.7);
  SpectrumTable t = diagonal_model_spectrum(c, 460.0);
  Symbol s = Symbol::oscillator_plus(2, hopf_pullback(c));
  WindowSpec rho = WindowSpec::gaussian(kPi / 8.0);
  for (double lam : {200.0, 300.0, 400.0}) {
    auto smooth = mollified_counting(t, rho, {lam});
    double vol = weyl_volume_radial(s, lam).value;
    CHECK(std::abs(smooth[0] - vol) <= 3.0 * std::sqrt(lam));
  }
}

TEST_CASE("envelope + log-log fit recovers a planted exponent") {
  std::vector<double> x = log_spaced(10.0, 1000.0, 200);
  std::vector<double> y(x.size());
  SplitMix64 rng(5);
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = 3.0 * std::pow(x[i], 0.75) * std::abs(std::sin(7.0 * std::sqrt(x[i])));
  EnvelopePoints env = envelope_per_octave(x, y, 2);
  FitReport fit = fit_loglog(env, "test");
  CHECK(fit.exponent == doctest::Approx(0.75).epsilon(0.08));
  CHECK(fit.n_points >= 8);
}

TEST_CASE("fit_loglog rejects degenerate input") {
  EnvelopePoints env;
  env.x = {1, 2, 3, 4, 5, 6, 7, 8};
  env.y = {0, 0, 0, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(fit_loglog(env, "zeros"), PreconditionError);
}

TEST_CASE("weyl_two_term_check: oscillator control has exponent ~ 1") {
  SpectrumTable t = oscillator_spectrum(2, 800.0);
  Symbol s = Symbol::oscillator(2);
  std::vector<double> grid = log_spaced(60.0, 700.0, 400);
  WeylTwoTermReport rep = weyl_two_term_check(t, s, grid);
  CHECK(rep.remainder_fit.exponent > 0.85);
  CHECK(rep.remainder_fit.exponent < 1.15);
}

TEST_CASE("weyl_two_term_check: hopf coefficient matches the surface integral") {
  Eigen::Vector2d c(0.3, 0.7);
  SpectrumTable t = diagonal_model_spectrum(c, 800.0);
  Symbol s = Symbol::oscillator_plus(2, hopf_pullback(c));
  std::vector<double> grid = log_spaced(60.0, 700.0, 400);
  WeylTwoTermReport rep = weyl_two_term_check(t, s, grid);
  CHECK(rep.coeff_surface == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rep.coeff_rel_dev < 0.02);
  CHECK(rep.remainder_fit.exponent < 0.9);
  // CSV layout
  std::string csv = rep.to_csv();
  CHECK(csv.substr(0, csv.find('\n')) == "lambda,N,weyl_main,weyl_second,remainder,smoothed");
}

TEST_CASE("weyl_two_term_check rejects p0 != 0 and coarse grids") {
  SpectrumTable t = oscillator_spectrum(2, 100.0);
  Symbol s = Symbol::oscillator(2);
  HomogeneousTerm c0;
  c0.degree = 0;
  c0.kind = TermKind::Constant;
  c0.coeff = 1.0;
  Symbol bad = s;
  bad.terms.push_back(c0);
  std::vector<double> grid = log_spaced(20.0, 90.0, 32);
  CHECK_THROWS_AS(weyl_two_term_check(t, bad, grid), PreconditionError);
  CHECK_THROWS_AS(weyl_two_term_check(t, s, {10.0, 20.0, 30.0}), PreconditionError);
}
