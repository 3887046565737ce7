#include "isospec/stationary_phase.hpp"

#include <cmath>

#include "isospec/parallel.hpp"

namespace isospec {

namespace {

constexpr double kPi = 3.141592653589793238;
constexpr double kTwoPi = 6.283185307179586477;
using cplx = std::complex<double>;

// int G((r-r0)/w) r^k e^{i q r^2 + i s r} dr over R, with G the unit Gaussian
// bump: closed-form moments of a complex Gaussian.  The bump localizes away
// from r = 0, so extending the integral to the whole line costs < e^{-60}.
struct RadialMoments {
  double r0, w;
  cplx moment(int k, double q, double s) const {
    cplx a(0.5 / (w * w), -q);
    cplx b(r0 / (w * w), s);
    cplx e = b * b / (4.0 * a) - cplx(0.5 * r0 * r0 / (w * w), 0.0);
    cplx m0 = std::sqrt(kPi / a) * std::exp(e);
    if (k == 0) return m0;
    cplx m1 = b / (2.0 * a) * m0;
    if (k == 1) return m1;
    cplx mk2 = m0, mk1 = m1, mk = m1;
    for (int j = 2; j <= k; ++j) {
      mk = (double(j - 1) * mk2 + b * mk1) / (2.0 * a);
      mk2 = mk1;
      mk1 = mk;
    }
    return mk;
  }
};

struct SphereNode {
  double weight;
  double u;      // <x-hat, eta-hat>
  double psi1;   // psi1(theta), 0 for the control
};

std::vector<SphereNode> sphere_nodes(int d, const HomogeneousTerm* psi1,
                                     const StationaryPhaseOptions& opt) {
  std::vector<SphereNode> nodes;
  if (d == 1) {
    int n = opt.circle_order;
    double h = kTwoPi / n;
    for (int k = 0; k < n; ++k) {
      double al = k * h;
      Eigen::VectorXd w(2);
      w << std::cos(al), std::sin(al);
      SphereNode nd;
      nd.weight = h;
      nd.u = std::cos(al) * std::sin(al);
      nd.psi1 = psi1 ? psi1->value(PhasePoint::unpack(w)) : 0.0;
      nodes.push_back(nd);
    }
    return nodes;
  }
  if (d == 2) {
    // torus-fiber coordinates: area measure = (1/2) dv dphi1 dphi2
    int nv = opt.sphere_order_v, np = opt.sphere_order_phi;
    std::vector<double> gx(nv), gw(nv);
    {
      // Gauss-Legendre on [0,1]
      for (int i = 0; i < nv; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (nv + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
          p0 = 1.0;
          p1 = 0.0;
          for (int k = 0; k < nv; ++k) {
            double p2 = p1;
            p1 = p0;
            p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
          }
          double dp = nv * (t * p0 - p1) / (t * t - 1.0);
          double dt = p0 / dp;
          t -= dt;
          if (std::abs(dt) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = 0.0;
        for (int k = 0; k < nv; ++k) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
        }
        double dp = nv * (t * p0 - p1) / (t * t - 1.0);
        gx[i] = 0.5 * (1.0 - t);
        gw[i] = 1.0 / ((1.0 - t * t) * dp * dp);
      }
    }
    double hphi = kTwoPi / np;
    for (int iv = 0; iv < nv; ++iv) {
      double v = gx[iv];
      double r1 = std::sqrt(v), r2 = std::sqrt(1.0 - v);
      double wv = 0.5 * gw[iv] * hphi * hphi;
      for (int i1 = 0; i1 < np; ++i1) {
        double s2p1 = std::sin(2.0 * i1 * hphi);
        double c1 = std::cos(i1 * hphi), s1 = std::sin(i1 * hphi);
        for (int i2 = 0; i2 < np; ++i2) {
          double s2p2 = std::sin(2.0 * i2 * hphi);
          SphereNode nd;
          nd.weight = wv;
          nd.u = 0.5 * (v * s2p1 + (1.0 - v) * s2p2);
          if (psi1) {
            double c2 = std::cos(i2 * hphi), s2 = std::sin(i2 * hphi);
            Eigen::VectorXd w(4);
            w << r1 * c1, r2 * c2, r1 * s1, r2 * s2;
            nd.psi1 = psi1->value(PhasePoint::unpack(w));
          } else {
            nd.psi1 = 0.0;
          }
          nodes.push_back(nd);
        }
      }
    }
    return nodes;
  }
  throw PreconditionError("stationary_phase_oracle: d = 1 or 2");
}

// composite Gauss-Legendre 8-point panel rule on [a, b]
struct PanelRule {
  std::vector<double> nodes, weights;
  PanelRule(double a, double b, int panels) {
    static const double gx[4] = {0.18343464249564980494, 0.52553240991632898582,
                                 0.79666647741362673959, 0.96028985649753623168};
    static const double gw[4] = {0.36268378337836198297, 0.31370664587788728734,
                                 0.22238103445337447054, 0.10122853629037625915};
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      double c = a + (p + 0.5) * h;
      for (int k = 0; k < 4; ++k) {
        nodes.push_back(c - 0.5 * h * gx[k]);
        weights.push_back(0.5 * h * gw[k]);
        nodes.push_back(c + 0.5 * h * gx[k]);
        weights.push_back(0.5 * h * gw[k]);
      }
    }
  }
};

cplx evaluate_integral(int d, const ModelPhase& mp, const WindowSpec& chi_shape,
                       const std::vector<SphereNode>& sphere, double lambda,
                       const StationaryPhaseOptions& opt) {
  double r0 = mp.r0();
  double w = opt.radial_width;
  double half = (chi_shape.shape == WindowShape::HannBump) ? chi_shape.half_width
                                                           : 6.0 * chi_shape.sigma_t;
  half = std::min(half, 0.45 * kPi);  // stay away from the sec/tan blow-up

  // oscillation budget: |dt(r^2 psi2 + t)| <= 1 + r_max^2 * sup|dt psi2_unit|
  double rmax2 = (r0 + 8.0 * w) * (r0 + 8.0 * w);
  double sec_h = 1.0 / std::cos(half), tan_h = std::tan(half);
  double dpsi_bound = 0.5 * sec_h * tan_h + 0.5 * sec_h * sec_h;
  double freq = lambda * (1.0 + rmax2 * dpsi_bound);
  int panels = std::max(24, int(freq * (2.0 * half) / kTwoPi / opt.gl_panels_per_period) + 1);
  PanelRule rule(-half, half, panels);

  RadialMoments rad{r0, w};
  int k_mom = 2 * d - 1;
  double sql = std::sqrt(lambda);

  std::vector<cplx> partial(sphere.size());
  parallel_for(sphere.size(), [&](std::size_t si) {
    const SphereNode& nd = sphere[si];
    double s = sql * nd.psi1;
    cplx acc(0.0, 0.0);
    for (std::size_t ti = 0; ti < rule.nodes.size(); ++ti) {
      double tau = rule.nodes[ti];
      double chi = chi_shape.centered_value(tau);
      if (chi == 0.0) continue;
      double q = lambda * mp.psi2_unit(tau, nd.u);
      cplx m = rad.moment(k_mom, q, s);
      acc += rule.weights[ti] * chi * std::polar(1.0, lambda * tau) * m;
    }
    partial[si] = acc * nd.weight;
  });
  cplx total(0.0, 0.0);
  for (const cplx& c : partial) total += c;  // fixed order
  // e^{i lambda t0} is a pure phase; keep it for completeness
  return std::pow(lambda, d) * std::polar(1.0, lambda * mp.t0()) * total;
}

}  // namespace

double ModelPhase::psi2_unit(double tau, double u) const {
  double sec = 1.0 / std::cos(tau);
  return u * (sec - 1.0) - 0.5 * std::tan(tau);
}

double ModelPhase::dpsi2_dt_unit(double tau, double u) const {
  double sec = 1.0 / std::cos(tau);
  double tan = std::tan(tau);
  return u * sec * tan - 0.5 * sec * sec;
}

double ModelPhase::d2psi2_dt2_unit(double tau, double u) const {
  double sec = 1.0 / std::cos(tau);
  double tan = std::tan(tau);
  return u * (sec * tan * tan + sec * sec * sec) - sec * sec * tan;
}

std::pair<double, double> critical_point(const ModelPhase& mp, double mu, double u,
                                         double psi1_theta) {
  double tau = 0.0, r = mp.r0();
  for (int it = 0; it < 60; ++it) {
    double p2 = mp.psi2_unit(tau, u);
    double dp2 = mp.dpsi2_dt_unit(tau, u);
    double d2p2 = mp.d2psi2_dt2_unit(tau, u);
    double f1 = 2.0 * r * r * p2 + mu * r * psi1_theta;
    double f2 = r * r * dp2 + 1.0;
    if (std::abs(f1) < 1e-14 && std::abs(f2) < 1e-14) break;
    // Jacobian in (tau, r)
    double j11 = 2.0 * r * r * dp2;
    double j12 = 4.0 * r * p2 + mu * psi1_theta;
    double j21 = r * r * d2p2;
    double j22 = 2.0 * r * dp2;
    double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-14) break;
    double dtau = (-f1 * j22 + f2 * j12) / det;
    double dr = (-j11 * f2 + j21 * f1) / det;
    tau += dtau;
    r += dr;
    if (std::abs(dtau) + std::abs(dr) < 1e-15) break;
  }
  return {tau, r};
}

std::vector<double> sqrt_anchored_lambdas(double lambda_min, double lambda_max, int anchors,
                                          int subsamples, double sqrt_span) {
  if (anchors < 2 || subsamples < 1)
    throw PreconditionError("sqrt_anchored_lambdas: need anchors >= 2, subsamples >= 1");
  std::vector<double> centers = log_spaced(lambda_min, lambda_max, anchors);
  std::vector<double> out;
  out.reserve(std::size_t(anchors) * subsamples);
  for (double c : centers) {
    double s0 = std::sqrt(c);
    for (int j = 0; j < subsamples; ++j) {
      double s = s0 + (subsamples > 1 ? sqrt_span * j / (subsamples - 1) : 0.0);
      out.push_back(s * s);
    }
  }
  return out;
}

StationaryPhaseResult stationary_phase_oracle(int d, const HomogeneousTerm* psi1,
                                              const ModelPhase& mp, const WindowSpec& chi,
                                              const std::vector<double>& lambdas,
                                              const StationaryPhaseOptions& opt) {
  if (lambdas.size() < 8)
    throw PreconditionError("stationary_phase_oracle: need >= 8 lambda points");
  if (psi1) psi1->validate(d);

  std::vector<SphereNode> sphere = sphere_nodes(d, psi1, opt);

  StationaryPhaseResult res;
  res.lambda = lambdas;
  res.values.resize(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    res.values[i] = evaluate_integral(d, mp, chi, sphere, lambdas[i], opt);

  if (opt.convergence_check) {
    std::size_t mid = lambdas.size() / 2;
    double lam = lambdas[mid];
    StationaryPhaseOptions fine = opt;
    fine.gl_panels_per_period *= 0.5;  // twice the panels
    fine.sphere_order_v += fine.sphere_order_v / 2;
    fine.sphere_order_phi += fine.sphere_order_phi / 2;
    fine.circle_order += fine.circle_order / 2;
    std::vector<SphereNode> sphere2 = sphere_nodes(d, psi1, fine);
    cplx ref = evaluate_integral(d, mp, chi, sphere2, lam, fine);
    double dev = std::abs(ref - res.values[mid]);
    double scale = std::max(std::abs(ref), 1e-30);
    // the consumer is a log-log exponent fit over at least half a decade;
    // a 1e-3 amplitude drift moves the fitted exponent by well under 1e-3
    if (dev > 1e-3 * scale + 1e-12)
      throw NumericalError("stationary_phase_oracle: quadrature drifted " +
                           std::to_string(dev / scale) + " on refinement");
  }

  // envelope over groups of consecutive lambdas, then log-log fit
  std::vector<double> mags(res.values.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(res.values[i]);
  EnvelopePoints env;
  int g = std::max(1, opt.envelope_group);
  for (std::size_t i = 0; i < mags.size(); i += g) {
    double best = -1.0, bx = 0.0;
    for (std::size_t j = i; j < std::min(mags.size(), i + std::size_t(g)); ++j)
      if (mags[j] > best) {
        best = mags[j];
        bx = lambdas[j];
      }
    env.x.push_back(bx);
    env.y.push_back(best);
  }
  res.fit = fit_loglog(env, "grouped envelope of |I(lambda)|");

  // critical-point expansion check at a few probe directions
  double max_t = 0.0, max_r = 0.0;
  for (double lam : {lambdas.front(), lambdas.back()}) {
    double mu = 1.0 / std::sqrt(lam);
    for (double u : {-0.45, -0.2, 0.0, 0.2, 0.45}) {
      double p1v = psi1 ? 0.5 : 0.0;  // representative psi1 magnitude
      auto [tc, rc] = critical_point(mp, mu, u, p1v);
      max_t = std::max(max_t, std::abs(tc) / mu);
      max_r = std::max(max_r, std::abs(rc - mp.r0()) / mu);
    }
  }
  res.crit_t_dev_over_mu = max_t;
  res.crit_r_dev_over_mu = max_r;
  return res;
}

}  // namespace isospec
