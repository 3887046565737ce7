#include "isospec/morse_bott.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "isospec/parallel.hpp"
#include "isospec/rng.hpp"
#include "isospec/sphere_calculus.hpp"

namespace isospec {

namespace {

struct StartResult {
  bool converged = false;
  Eigen::VectorXd point;
  double value = 0.0;
};

double geodesic(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  double c = std::clamp(a.dot(b), -1.0, 1.0);
  return std::acos(c);
}

// Tangent frame at w with the flow direction removed: 2d-2 orthonormal
// columns spanning the complement of span(flow) inside T_w S^{2d-1}.
Eigen::MatrixXd transverse_frame(const Eigen::VectorXd& w) {
  int n = int(w.size());
  Eigen::VectorXd fl = flow_direction(w).normalized();
  Eigen::MatrixXd full = tangent_frame(w);
  // project the flow direction out, then re-orthonormalize
  Eigen::MatrixXd proj = full - fl * (fl.transpose() * full);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(proj);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n - 2);
  // columns of q may pick up components along w or fl from rank deficiency;
  // clean them explicitly
  for (int c = 0; c < q.cols(); ++c) {
    Eigen::VectorXd v = q.col(c);
    v -= w * w.dot(v);
    v -= fl * fl.dot(v);
    for (int c2 = 0; c2 < c; ++c2) v -= q.col(c2) * q.col(c2).dot(v);
    q.col(c) = v.normalized();
  }
  return q;
}

// Damped Newton for grad(F|_S) = 0.  The inverse uses |eigenvalue|
// regularization so saddle-type critical points attract as well.
StartResult solve_from(const AmbientFunction& F, Eigen::VectorXd w, double grad_tol,
                       int max_iter) {
  const double h = 1e-5;
  StartResult res;
  for (int it = 0; it < max_iter; ++it) {
    SphereDerivatives der = sphere_grad_hess(F, w, h);
    double gnorm = der.gradient.norm();
    if (gnorm <= grad_tol) {
      res.converged = true;
      res.point = w;
      res.value = F(w);
      return res;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(der.hessian);
    Eigen::VectorXd lam = es.eigenvalues();
    double lmax = lam.cwiseAbs().maxCoeff();
    double eps = std::max(1e-8, 1e-6 * lmax);
    Eigen::VectorXd coef = es.eigenvectors().transpose() * der.gradient;
    Eigen::VectorXd step_frame(lam.size());
    for (int i = 0; i < lam.size(); ++i) {
      double li = lam[i];
      double inv = (std::abs(li) > eps) ? 1.0 / li : 0.0;
      step_frame[i] = -coef[i] * inv;
    }
    Eigen::VectorXd delta = der.frame * (es.eigenvectors() * step_frame);
    double dn = delta.norm();
    if (dn > 0.5) delta *= 0.5 / dn;  // keep retractions sane

    // backtracking on the gradient norm
    double t = 1.0;
    bool moved = false;
    for (int bs = 0; bs < 12; ++bs) {
      Eigen::VectorXd cand = (w + t * delta).normalized();
      double gn_cand = sphere_gradient(F, cand, h).norm();
      if (gn_cand < gnorm * (1.0 - 1e-4 * t) || gn_cand < grad_tol) {
        w = cand;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) {
      // try plain gradient descent as a fallback
      Eigen::VectorXd gdir = der.frame * der.gradient;
      double t2 = 0.25 / std::max(1.0, gnorm);
      bool ok = false;
      for (int bs = 0; bs < 12; ++bs) {
        Eigen::VectorXd cand = (w - t2 * gdir).normalized();
        double gn_cand = sphere_gradient(F, cand, h).norm();
        if (gn_cand < gnorm) {
          w = cand;
          ok = true;
          break;
        }
        t2 *= 0.5;
      }
      if (!ok) break;
    }
  }
  // final check
  double gfin = sphere_gradient(F, w, h).norm();
  if (gfin <= grad_tol) {
    res.converged = true;
    res.point = w;
    res.value = F(w);
  }
  return res;
}

int hessian_rank_transverse(const AmbientFunction& F, const Eigen::VectorXd& w,
                            double rel_cutoff) {
  Eigen::MatrixXd tf = transverse_frame(w);
  SphereDerivatives der = sphere_grad_hess(F, w, 1e-5, &tf);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(der.hessian);
  Eigen::VectorXd lam = es.eigenvalues().cwiseAbs();
  double lmax = lam.maxCoeff();
  double cutoff = std::max(rel_cutoff * lmax, 1e-5);
  int rank = 0;
  for (int i = 0; i < lam.size(); ++i)
    if (lam[i] > cutoff) ++rank;
  return rank;
}

}  // namespace

Eigen::VectorXd flow_direction(const Eigen::VectorXd& w) {
  int d = int(w.size()) / 2;
  Eigen::VectorXd v(2 * d);
  v.head(d) = w.tail(d);
  v.tail(d) = -w.head(d);
  return v;
}

MorseBottReport classify_morse_bott(const HomogeneousTerm& f, int d, int samples,
                                    std::uint64_t seed) {
  if (samples < 8) throw PreconditionError("classify_morse_bott: need samples >= 8");
  f.validate(d);

  HomogeneousTerm xf = f.xray();
  AmbientFunction F = [&xf](const Eigen::VectorXd& w) {
    return xf.value(PhasePoint::unpack(w));
  };

  MorseBottReport rep;
  rep.n_starts = samples;

  // scale of Xf on the sphere, from a deterministic probe set
  double scale = 0.0;
  {
    SplitMix64 rng(seed, 0xABCDEF);
    for (int i = 0; i < 64; ++i) scale = std::max(scale, std::abs(F(rng.unit_vector(2 * d))));
    scale = std::max(scale, 1e-12);
  }

  // flat-set evidence: fraction of probe points with vanishing sphere gradient
  std::vector<Eigen::VectorXd> starts(samples);
  for (int i = 0; i < samples; ++i) {
    SplitMix64 rng(seed, std::uint64_t(i) + 1);
    starts[i] = rng.unit_vector(2 * d);
  }
  std::vector<char> flat(samples, 0);
  parallel_for(samples, [&](std::size_t i) {
    double gn = sphere_gradient(F, starts[i]).norm();
    flat[i] = gn < 1e-9 * std::max(1.0, scale) ? 1 : 0;
  });
  int nflat = int(std::count(flat.begin(), flat.end(), char(1)));
  rep.flat_fraction = double(nflat) / samples;
  if (rep.flat_fraction > 1e-3 && nflat >= 2) {
    rep.flat_set_detected = true;
    rep.is_morse_bott = false;
    rep.message = "sphere gradient of Xf vanishes on a sample set of relative measure " +
                  std::to_string(rep.flat_fraction);
    return rep;
  }

  // multi-start solves
  const double grad_tol = 1e-9 * std::max(1.0, scale);
  std::vector<StartResult> results(samples);
  parallel_for(samples, [&](std::size_t i) {
    results[i] = solve_from(F, starts[i], grad_tol, 80);
  });
  rep.n_converged = 0;
  for (const auto& r : results)
    if (r.converged) ++rep.n_converged;
  if (rep.n_converged < samples - samples / 100 - 1) {
    rep.diagnostic_failure = true;
    rep.message = "only " + std::to_string(rep.n_converged) + " of " +
                  std::to_string(samples) + " starts converged";
    return rep;
  }

  // dedup at geodesic distance 1e-4, then group points into manifolds:
  // same critical value and chain-connected at moderate distance.
  std::vector<Eigen::VectorXd> pts;
  std::vector<double> vals;
  std::vector<int> mults;
  for (const auto& r : results) {
    if (!r.converged) continue;
    bool dup = false;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (geodesic(pts[k], r.point) < 1e-4) {
        ++mults[k];
        dup = true;
        break;
      }
    }
    if (!dup) {
      pts.push_back(r.point);
      vals.push_back(r.value);
      mults.push_back(1);
    }
  }

  // Group by critical value.  Every Xf this grammar can produce is a
  // Hermitian form in the complex coordinates plus a radial part, so its
  // critical manifolds on the sphere are eigenspace spheres: distinct
  // manifolds carry distinct values, and equal values mean one connected
  // manifold.
  int n = int(pts.size());
  const double value_tol = 1e-8 * std::max(1.0, scale);
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (auto& g : groups)
      if (std::abs(vals[g[0]] - vals[i]) < value_tol) {
        g.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }

  rep.k_min = std::numeric_limits<int>::max();
  for (const auto& g : groups) {
    CriticalManifold m;
    double vsum = 0;
    int basin = 0;
    for (int idx : g) {
      vsum += vals[idx] * mults[idx];
      basin += mults[idx];
    }
    m.basin_size = basin;
    m.value = vsum / basin;
    int nrep = std::min<int>(5, int(g.size()));
    for (int k = 0; k < nrep; ++k) m.representative_points.push_back(pts[g[k]].normalized());

    // transverse rank by majority vote over representatives
    std::vector<int> ranks;
    for (const auto& p : m.representative_points)
      ranks.push_back(hessian_rank_transverse(F, p, 1e-3));
    std::sort(ranks.begin(), ranks.end());
    m.hessian_rank = ranks[ranks.size() / 2];
    m.dimension = 1 + (2 * d - 2 - m.hessian_rank);
    rep.k_min = std::min(rep.k_min, m.hessian_rank);
    rep.manifolds.push_back(std::move(m));
  }
  if (rep.manifolds.empty()) {
    rep.k_min = 0;
    rep.diagnostic_failure = true;
    rep.message = "no critical manifolds located";
    return rep;
  }
  rep.is_morse_bott = rep.k_min > 0 && !rep.flat_set_detected;
  return rep;
}

}  // namespace isospec
