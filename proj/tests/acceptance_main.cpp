// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances and bands are pinned in code.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "isospec/counting.hpp"
#include "isospec/hermite.hpp"
#include "isospec/ladder.hpp"
#include "isospec/mehler.hpp"
#include "isospec/morse_bott.hpp"
#include "isospec/rng.hpp"
#include "isospec/spectrum_table.hpp"
#include "isospec/stationary_phase.hpp"
#include "isospec/trace_transform.hpp"
#include "isospec/wavepacket.hpp"
#include "isospec/weyl_matrix.hpp"

using namespace isospec;

namespace {

constexpr double kPi = 3.141592653589793238;
constexpr double kTwoPi = 6.283185307179586477;

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s  (%s)\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::uint64_t pascal_binomial(long n, long k) {
  std::vector<unsigned __int128> row(k + 1, 0);
  row[0] = 1;
  for (long i = 1; i <= n; ++i)
    for (long j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return std::uint64_t(row[k]);
}

std::complex<double> eigensum_kernel_1d(double t, double x, double y, int terms) {
  Eigen::VectorXd px = hermite_functions(terms, x);
  Eigen::VectorXd py = hermite_functions(terms, y);
  std::complex<double> acc(0, 0);
  for (int n = 0; n <= terms; ++n) {
    double frac = double(n) / terms;
    double g = 1.0;
    if (frac > 0.5) {
      double s = 2.0 * frac - 1.0;
      g = std::exp(1.0 - 1.0 / (1.0 - s * s));
    }
    acc += px[n] * py[n] * std::polar(g, -t * (n + 0.5));
  }
  return acc;
}

// ---------------------------------------------------------------- 1
void criterion_exact_oracles() {
  char detail[256];
  bool ok = true;
  std::string why;

  // multiplicity vs independent Pascal binomial
  for (int d = 1; d <= 5 && ok; ++d) {
    for (long j = 0; j <= 1000; ++j) {
      if (multiplicity(j, d) != pascal_binomial(d + j - 1, std::min<long>(j, d - 1))) {
        ok = false;
        why = "multiplicity mismatch at j=" + std::to_string(j) + ", d=" + std::to_string(d);
        break;
      }
    }
  }

  // quadrature pairing vs ladder algebra for every monomial x^a xi^b of
  // total degree <= 4, d=1, N_max=60
  double worst_entry = 0.0;
  if (ok) {
    const int n_max = 60;
    std::vector<std::pair<int, int>> monos;
    std::vector<std::function<double(double, double)>> fns;
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b) {
        monos.emplace_back(a, b);
        fns.push_back([a, b](double x, double xi) {
          return std::pow(x, a) * std::pow(xi, b);
        });
      }
    auto mats = weyl_pairing_1d(fns, n_max, n_max + 8);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      Eigen::MatrixXcd want = weyl_monomial_matrix_1d(monos[i].first, monos[i].second, n_max);
      worst_entry = std::max(worst_entry, (mats[i] - want).cwiseAbs().maxCoeff());
    }
    if (worst_entry > 1e-8) {
      ok = false;
      why = "weyl vs ladder deviation " + std::to_string(worst_entry);
    }
  }

  // mehler vs eigensum at 20 seeded points
  double worst_kernel = 0.0;
  if (ok) {
    SplitMix64 rng(20240817);
    for (int k = 0; k < 20; ++k) {
      double t;
      do {
        t = -7.0 + 14.0 * rng.uniform();
      } while (std::abs(std::remainder(t, kPi)) < 0.25 ||
               std::abs(std::abs(std::remainder(t, kTwoPi)) - 0.5 * kPi) < 0.25);
      double x = -2.0 + 4.0 * rng.uniform();
      double y = -2.0 + 4.0 * rng.uniform();
      Eigen::VectorXd vx(1), vy(1);
      vx << x;
      vy << y;
      worst_kernel = std::max(
          worst_kernel,
          std::abs(mehler_kernel(t, vx, vy) - eigensum_kernel_1d(t, x, y, 16384)));
    }
    if (worst_kernel > 1e-8) {
      ok = false;
      why = "mehler vs eigensum deviation " + std::to_string(worst_kernel);
    }
  }

  std::snprintf(detail, sizeof(detail),
                "binomials j<=1000 d<=5 exact; weyl-ladder max dev %.2e; mehler-eigensum max dev %.2e%s%s",
                worst_entry, worst_kernel, why.empty() ? "" : "; ", why.c_str());
  report(1, "exact-oracle suite", ok, detail);
}

// ---------------------------------------------------------------- 2
void criterion_trace_dichotomy() {
  WindowSpec w = WindowSpec::gaussian(kPi / 8.0);
  double trust = 2000.0 + 0.5 + 10.0 * w.lambda_side_width() + 5.0;
  SpectrumTable degenerate = diagonal_model_spectrum(Eigen::Vector2d(0.5, 0.5), trust);
  SpectrumTable morsebott = diagonal_model_spectrum(Eigen::Vector2d(0.3, 0.7), trust);

  std::vector<double> grid = anchored_grid(50.0, 2000.0, 36, 17, 1.0);
  FitReport fd = singularity_exponent(trace_transform(degenerate, 1, w, grid));
  FitReport fm = singularity_exponent(trace_transform(morsebott, 1, w, grid));

  bool ok = fd.exponent >= 0.85 && fd.exponent <= 1.15 && fm.exponent >= 0.35 &&
            fm.exponent <= 0.65 && (fd.exponent - fm.exponent) >= 0.25;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "degenerate %.3f (band [0.85,1.15]); morse-bott %.3f (band [0.35,0.65]); gap %.3f >= 0.25",
                fd.exponent, fm.exponent, fd.exponent - fm.exponent);
  report(2, "trace-singularity dichotomy", ok, detail);
}

// ---------------------------------------------------------------- 3
void criterion_weyl_two_term() {
  Eigen::Vector2d c(0.3, 0.7);
  SpectrumTable hopf = diagonal_model_spectrum(c, 2005.0);
  SpectrumTable osc = oscillator_spectrum(2, 2005.0);
  Symbol s_hopf = Symbol::oscillator_plus(2, hopf_pullback(c));
  Symbol s_osc = Symbol::oscillator(2);
  std::vector<double> grid = log_spaced(100.0, 2000.0, 420);

  WeylTwoTermReport rh = weyl_two_term_check(hopf, s_hopf, grid);
  WeylTwoTermReport ro = weyl_two_term_check(osc, s_osc, grid);

  bool ok = rh.remainder_fit.exponent < 0.9 && ro.remainder_fit.exponent >= 0.9 &&
            ro.remainder_fit.exponent <= 1.1 && rh.coeff_rel_dev <= 0.02;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "hopf exponent %.3f < 0.9; oscillator %.3f in [0.9,1.1]; lambda^{3/2} coeff %.5f vs %.5f (dev %.2f%%)",
                rh.remainder_fit.exponent, ro.remainder_fit.exponent, rh.coeff_fitted,
                rh.coeff_surface, 100.0 * rh.coeff_rel_dev);
  report(3, "two-term eigenvalue count", ok, detail);
}

// ---------------------------------------------------------------- 4
void criterion_poisson() {
  WindowSpec probe3 = WindowSpec::gaussian(kPi / 16.0, 3.0);
  WindowSpec probe5 = WindowSpec::gaussian(kPi / 16.0, 5.0);
  WindowSpec ref = WindowSpec::gaussian(kPi / 16.0, 0.0);
  double trust = 1000.0 + 10.0 * ref.lambda_side_width() + 5.0;

  std::vector<SpectrumTable> tables;
  tables.push_back(oscillator_spectrum(2, trust));
  tables.push_back(sqrt_oscillator_spectrum(2, trust, 1.0));
  tables.push_back(diagonal_model_spectrum(Eigen::Vector2d(0.3, 0.7), trust));
  const char* names[3] = {"oscillator", "sqrt", "hopf"};

  std::vector<double> grid = log_spaced(100.0, 1000.0, 33);
  bool ok = true;
  double worst_ratio = 0.0;
  std::string worst_model;
  for (int m = 0; m < 3; ++m) {
    TraceTransform base = windowed_transform(tables[m], ref, grid, 0.25 * kPi);
    for (const WindowSpec& probe : {probe3, probe5}) {
      TraceTransform off = windowed_transform(tables[m], probe, grid, 0.25 * kPi);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        double ratio = std::abs(off.values[i]) / std::abs(base.values[i]);
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          worst_model = names[m];
        }
      }
    }
  }
  ok = worst_ratio <= 1e-3;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "windows at t=3,5: worst |I|/|I_0| = %.2e (%s) <= 1e-3", worst_ratio,
                worst_model.c_str());
  report(4, "Poisson relation away from 2 pi Z", ok, detail);
}

// ---------------------------------------------------------------- 5
void criterion_stationary_phase() {
  ModelPhase mp;
  mp.n = 1;
  WindowSpec chi = WindowSpec::hann(0.5);

  // control: plain log grid away from the preasymptotic range
  std::vector<double> lams1 = log_spaced(120.0, 400.0, 24);
  StationaryPhaseOptions opt;
  StationaryPhaseResult control = stationary_phase_oracle(1, nullptr, mp, chi, lams1, opt);

  // Morse-Bott case: the two critical circles of psi1 = hopf(0, 2) sit at
  // phase values {0, 2} sqrt(lambda); scanning a full interference period
  // per anchor puts the per-anchor maximum on the beat envelope
  HomogeneousTerm psi1 = hopf_pullback(Eigen::Vector2d(0.0, 2.0));
  std::vector<double> lams2 = sqrt_anchored_lambdas(80.0, 400.0, 10, 8, kPi);
  StationaryPhaseOptions opt2 = opt;
  opt2.envelope_group = 8;
  StationaryPhaseResult mb = stationary_phase_oracle(2, &psi1, mp, chi, lams2, opt2);

  bool ok = std::abs(control.fit.exponent - 0.0) <= 0.15 &&
            std::abs(mb.fit.exponent - 0.5) <= 0.15;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "control d=1 exponent %.3f (target 0 +- 0.15); morse-bott d=2 exponent %.3f (target 0.5 +- 0.15)",
                control.fit.exponent, mb.fit.exponent);
  report(5, "stationary-phase oracle", ok, detail);
}

// ---------------------------------------------------------------- 6
void criterion_wavefront_shift() {
  Eigen::VectorXd c1(1);
  c1 << 0.4;
  Eigen::VectorXd xi1(1);
  xi1 << 12.0;
  ShiftReport r1 = wavepacket_shift(c1, {1, 2, 3}, xi1, 1.0);

  Eigen::VectorXd c2(2);
  c2 << 0.3, 0.7;
  Eigen::VectorXd xi2(2);
  xi2 << 12.0, 0.0;
  ShiftReport r2 = wavepacket_shift(c2, {1, 2, 3}, xi2, 1.0);

  bool ok = r1.max_rel_dev <= 0.10 && r1.linearity_dev <= 0.05 && r2.max_rel_dev <= 0.10 &&
            r2.linearity_dev <= 0.05;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "d=1 rel dev %.3f, linearity %.3f; d=2 rel dev %.3f, linearity %.3f (bands 0.10 / 0.05)",
                r1.max_rel_dev, r1.linearity_dev, r2.max_rel_dev, r2.linearity_dev);
  report(6, "wavefront shift", ok, detail);
}

// ---------------------------------------------------------------- 7
void criterion_classifier() {
  MorseBottReport d2 = classify_morse_bott(hopf_pullback(Eigen::Vector2d(0.3, 0.7)), 2, 512, 1);
  MorseBottReport d3 =
      classify_morse_bott(hopf_pullback(Eigen::Vector3d(0.2, 0.5, 0.8)), 3, 512, 2);
  MorseBottReport flat = classify_morse_bott(hopf_pullback(Eigen::Vector2d(0.5, 0.5)), 2, 256, 3);

  bool ok = !d2.diagnostic_failure && d2.k_min == 2 && d2.manifolds.size() == 2 &&
            !d3.diagnostic_failure && d3.k_min == 4 && d3.manifolds.size() == 3 &&
            flat.flat_set_detected && !flat.is_morse_bott;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "d=2: k=%d with %zu circles (want 2, 2); d=3: k=%d with %zu circles (want 4, 3); equal-c flat=%d",
                d2.k_min, d2.manifolds.size(), d3.k_min, d3.manifolds.size(),
                int(flat.flat_set_detected));
  report(7, "Morse-Bott classifier", ok, detail);
}

// ---------------------------------------------------------------- 8
void criterion_tauberian() {
  WindowSpec rho = WindowSpec::gaussian(kPi / 8.0);
  double trust = 2000.0 + 10.0 * rho.lambda_side_width() + 5.0;
  std::vector<double> grid = log_spaced(100.0, 2000.0, 128);

  std::vector<SpectrumTable> tables;
  tables.push_back(oscillator_spectrum(2, trust));
  tables.push_back(sqrt_oscillator_spectrum(2, trust, 1.0));
  tables.push_back(diagonal_model_spectrum(Eigen::Vector2d(0.3, 0.7), trust));
  const char* names[3] = {"oscillator", "sqrt", "hopf"};

  bool ok = true;
  double quart[3][2] = {};
  for (int m = 0; m < 3; ++m) {
    auto gap = tauberian_gap(tables[m], rho, grid, 2);
    std::size_t q = gap.size() / 4;
    double first = 0, last = 0;
    for (std::size_t i = 0; i < q; ++i) {
      first += std::abs(gap[i]) / q;
      last += std::abs(gap[gap.size() - 1 - i]) / q;
    }
    quart[m][0] = first;
    quart[m][1] = last;
    if (last > 2.0 * first) ok = false;  // bounded: no growth across the grid
  }
  if (!(quart[2][1] < quart[2][0])) ok = false;  // decaying trend for hopf
  char detail[300];
  std::snprintf(detail, sizeof(detail),
                "quartile means (first -> last): %s %.3f -> %.3f, %s %.3f -> %.3f, %s %.3f -> %.3f (hopf must decay)",
                names[0], quart[0][0], quart[0][1], names[1], quart[1][0], quart[1][1], names[2],
                quart[2][0], quart[2][1]);
  report(8, "Tauberian consistency", ok, detail);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  try {
    criterion_exact_oracles();
    criterion_trace_dichotomy();
    criterion_weyl_two_term();
    criterion_poisson();
    criterion_stationary_phase();
    criterion_wavefront_shift();
    criterion_classifier();
    criterion_tauberian();
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    return 1;
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 8 criteria passed in %.1f s\n", 8 - g_failures, dt);
  return g_failures == 0 ? 0 : 1;
}
