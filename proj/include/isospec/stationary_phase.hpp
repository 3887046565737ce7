#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "isospec/fit.hpp"
#include "isospec/symbol.hpp"
#include "isospec/window.hpp"

namespace isospec {

// Model phase near t0 = 2 pi n: psi2(t, x, eta) is the Mehler phase minus its
// diagonal value,
//   psi2(t, r theta) = r^2 [ u(theta)(sec t' - 1) - tan t' / 2 ],  t' = t - t0,
// with u(theta) = <x-hat, eta-hat>.  psi2(t0, .) = 0 and
// dt psi2(t0, r, theta) = -r^2/2, so the time derivative hits -1 at r0 = sqrt(2).
struct ModelPhase {
  int n = 1;
  double t0() const { return 6.283185307179586477 * n; }
  double r0() const { return 1.41421356237309504880; }

  double psi2_unit(double tau, double u) const;    // value at r = 1
  double dpsi2_dt_unit(double tau, double u) const;
  double d2psi2_dt2_unit(double tau, double u) const;
};

struct StationaryPhaseResult {
  std::vector<double> lambda;
  std::vector<std::complex<double>> values;
  FitReport fit;
  // critical-point expansion check: max |t_c - t0| / mu and |r_c - r0| / mu
  // over probe directions, with mu = lambda^{-1/2}
  double crit_t_dev_over_mu = 0.0;
  double crit_r_dev_over_mu = 0.0;
};

struct StationaryPhaseOptions {
  double radial_width = 0.12;    // Gaussian bump width around r0 (scaled radius)
  int sphere_order_v = 32;       // Gauss-Legendre in the torus-fiber coordinate
  int sphere_order_phi = 12;     // trapezoid per angle
  int circle_order = 128;        // d = 1 sphere
  double gl_panels_per_period = 0.5;  // oscillation periods per GL-8 panel
  int envelope_group = 3;             // consecutive lambdas per envelope point
  bool convergence_check = true;
};

// Direct quadrature of
//   I(lambda) = lambda^d int e^{i lambda (psi2 + t') + i lambda t0
//                + i sqrt(lambda) r psi1(theta)} chi(t) A(r) r^{2d-1} dt dr dtheta
// in the scaled radial variable.  The radial integral is a complex Gaussian
// moment (exact closed form); t and theta are quadratured.  psi1 may be null
// (the control case).
StationaryPhaseResult stationary_phase_oracle(int d, const HomogeneousTerm* psi1,
                                              const ModelPhase& mp, const WindowSpec& chi,
                                              const std::vector<double>& lambdas,
                                              const StationaryPhaseOptions& opt = {});

// Newton solve of the critical system
//   2 psi2 + mu psi1 = 0,   dt psi2 + mu dt psi1 + 1 = 0
// in (t', r) from (0, r0); returns (t'_c, r_c).
std::pair<double, double> critical_point(const ModelPhase& mp, double mu, double u,
                                         double psi1_theta);

// Lambda list of `anchors` log-spaced anchor points, each scanned by
// `subsamples` offsets spanning `sqrt_span` in sqrt(lambda).  With sqrt_span
// covering half an interference beat, the per-anchor maximum sits on the
// beat envelope; group the fit by `subsamples`.
std::vector<double> sqrt_anchored_lambdas(double lambda_min, double lambda_max, int anchors,
                                          int subsamples, double sqrt_span);

}  // namespace isospec
