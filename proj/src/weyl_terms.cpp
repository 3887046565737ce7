#include "isospec/weyl_terms.hpp"

#include <cmath>

#include "isospec/parallel.hpp"
#include "isospec/rng.hpp"

namespace isospec {

namespace {

constexpr double kPi = 3.141592653589793238;
constexpr double kTwoPi = 6.283185307179586477;

// Gauss-Legendre nodes/weights on [0,1] via Newton on Legendre polynomials.
void gauss_legendre01(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
      }
      double dp = n * (t * p0 - p1) / (t * t - 1.0);
      double dt = p0 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = 0.0;
    for (int k = 0; k < n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2 * k + 1) * t * p1 - k * p2) / (k + 1);
    }
    double dp = n * (t * p0 - p1) / (t * t - 1.0);
    double wi = 2.0 / ((1.0 - t * t) * dp * dp);
    // map [-1,1] -> [0,1]
    x[i] = 0.5 * (1.0 - t);
    x[n - 1 - i] = 0.5 * (1.0 + t);
    w[i] = 0.5 * wi;
    w[n - 1 - i] = 0.5 * wi;
  }
}

void check_volume_symbol(const Symbol& s) {
  s.validate();
  for (const auto& t : s.terms)
    if (t.degree == 0 && t.coeff != 0.0)
      throw PreconditionError("weyl_volume: symbol must be restricted to degrees {2,1}");
  if (s.d > 2) throw PreconditionError("weyl_volume radial quadrature supports d <= 2");
}

// Rigorous sup of |p1| over the unit sphere, by term.
double p1_sup_bound(const Symbol& s) {
  double bound = 0.0;
  for (const auto& t : s.terms) {
    if (t.degree != 1) continue;
    switch (t.kind) {
      case TermKind::LinearForm:
        bound += t.b.norm();
        break;
      case TermKind::QuadraticOverRoot: {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t.Q);
        bound += es.eigenvalues().cwiseAbs().maxCoeff();
        break;
      }
      case TermKind::RadialPower:
        bound += std::abs(t.coeff) * std::sqrt(0.5);
        break;
      default:
        throw PreconditionError("weyl_volume: unexpected degree-1 term kind");
    }
  }
  return bound;
}

}  // namespace

SphereGrid SphereGrid::make(int d, int order_radial, int order_angular) {
  SphereGrid g;
  if (d == 1) {
    int n = std::max(8, order_angular * 8);
    double h = kTwoPi / n;
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXd w(2);
      w << std::cos(k * h), std::sin(k * h);
      g.nodes.push_back(w);
      g.weights.push_back(h);
    }
    return g;
  }
  if (d == 2) {
    std::vector<double> gx, gw;
    gauss_legendre01(order_radial, gx, gw);
    int nphi = order_angular;
    double hphi = kTwoPi / nphi;
    for (int iv = 0; iv < order_radial; ++iv) {
      double v = gx[iv];
      double r1 = std::sqrt(v), r2 = std::sqrt(1.0 - v);
      // d(area) = (1/2) dv dphi1 dphi2
      double wv = 0.5 * gw[iv] * hphi * hphi;
      for (int i1 = 0; i1 < nphi; ++i1) {
        double c1 = std::cos(i1 * hphi), s1 = std::sin(i1 * hphi);
        for (int i2 = 0; i2 < nphi; ++i2) {
          double c2 = std::cos(i2 * hphi), s2 = std::sin(i2 * hphi);
          Eigen::VectorXd w(4);
          w << r1 * c1, r2 * c2, r1 * s1, r2 * s2;  // (x1, x2, xi1, xi2)
          g.nodes.push_back(w);
          g.weights.push_back(wv);
        }
      }
    }
    return g;
  }
  throw PreconditionError("SphereGrid: only d = 1, 2 supported");
}

double boundary_radius(const Symbol& s, const Eigen::VectorXd& theta, double lambda) {
  PhasePoint p = PhasePoint::unpack(theta);
  double p2 = s.degree_part(2, p);
  double p1 = s.has_degree(1) ? s.degree_part(1, p) : 0.0;
  if (p2 <= 0) throw PreconditionError("boundary_radius: principal symbol not positive");

  auto g = [&](double r) { return r * r * p2 + r * p1; };
  // unique root beyond the vertex of the parabola
  double lo = std::max(0.0, -p1 / (2.0 * p2));
  double hi = (std::abs(p1) + std::sqrt(p1 * p1 + 4.0 * p2 * lambda)) / (2.0 * p2) + 1.0;
  while (g(hi) < lambda) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) < lambda)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-13 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

ValueWithError weyl_volume_radial(const Symbol& s, double lambda,
                                  const RadialQuadratureSpec& spec) {
  check_volume_symbol(s);
  if (lambda <= 0) throw PreconditionError("weyl_volume: lambda must be positive");

  auto run = [&](int nr, int na) {
    SphereGrid grid = SphereGrid::make(s.d, nr, na);
    double c_sub = 0.0;
    double acc = 0.0;
    int twod = 2 * s.d;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      PhasePoint p = PhasePoint::unpack(grid.nodes[i]);
      double p2 = s.degree_part(2, p);
      double p1 = s.has_degree(1) ? s.degree_part(1, p) : 0.0;
      if (p2 <= 0) throw PreconditionError("weyl_volume: sublevel set unbounded (p2 <= 0)");
      c_sub = std::max(c_sub, std::abs(p1) / std::sqrt(p2));
      double r = boundary_radius(s, grid.nodes[i], lambda);
      acc += grid.weights[i] * std::pow(r, twod) / twod;
    }
    if (c_sub * c_sub >= lambda)
      throw PreconditionError("weyl_volume: subordination |p1| <= C sqrt(p2) fails for this lambda");
    return acc * std::pow(kTwoPi, -s.d);
  };

  ValueWithError out;
  out.value = run(spec.order_radial, spec.order_angular);
  double coarse = run(std::max(6, (2 * spec.order_radial) / 3),
                      std::max(8, (2 * spec.order_angular) / 3));
  out.error = std::abs(out.value - coarse);
  return out;
}

ValueWithError weyl_volume_montecarlo(const Symbol& s, double lambda,
                                      const MonteCarloSpec& spec) {
  check_volume_symbol(s);
  if (!s.principal_is_oscillator)
    throw PreconditionError("weyl_volume_montecarlo: principal part must be the oscillator");
  if (lambda <= 0) throw PreconditionError("weyl_volume: lambda must be positive");
  double c_bound = p1_sup_bound(s);
  if (c_bound * c_bound * 2.0 >= lambda)
    throw PreconditionError("weyl_volume: subordination fails for this lambda");
  // r^2/2 - c r <= value on boundary  =>  r <= c + sqrt(c^2 + 2 lambda)
  double r_max = c_bound + std::sqrt(c_bound * c_bound + 2.0 * lambda);

  int twod = 2 * s.d;
  // log-volume of the 2d-ball of radius r_max
  double ball = std::pow(kPi, s.d) / std::tgamma(s.d + 1) * std::pow(r_max, twod);

  const std::uint64_t chunk = 65536;
  std::uint64_t nchunks = (spec.n + chunk - 1) / chunk;
  std::vector<std::uint64_t> hits(nchunks, 0);
  std::vector<std::uint64_t> counts(nchunks, 0);
  parallel_for(nchunks, [&](std::size_t ci) {
    SplitMix64 rng(spec.seed, ci);
    std::uint64_t m = std::min<std::uint64_t>(chunk, spec.n - std::uint64_t(ci) * chunk);
    std::uint64_t h = 0;
    for (std::uint64_t k = 0; k < m; ++k) {
      Eigen::VectorXd w = rng.ball_point(twod, r_max);
      PhasePoint p = PhasePoint::unpack(w);
      double val = s.degree_part(2, p);
      if (s.has_degree(1) && w.norm() > 0) val += s.degree_part(1, p);
      if (val <= lambda) ++h;
    }
    hits[ci] = h;
    counts[ci] = m;
  });
  std::uint64_t total_hits = 0, total = 0;
  for (std::size_t i = 0; i < nchunks; ++i) {
    total_hits += hits[i];
    total += counts[i];
  }
  double frac = double(total_hits) / double(total);
  ValueWithError out;
  out.value = std::pow(kTwoPi, -s.d) * ball * frac;
  out.error = std::pow(kTwoPi, -s.d) * ball * std::sqrt(std::max(frac * (1.0 - frac), 1e-300) / double(total));
  return out;
}

double surface_integral_p1(const Symbol& s, const RadialQuadratureSpec& spec) {
  s.validate();
  if (!s.principal_is_oscillator)
    throw PreconditionError("surface_integral_p1: principal part must be the oscillator");
  if (s.d > 2) throw PreconditionError("surface_integral_p1 supports d <= 2");
  // {p2 = 1} is the sphere of radius sqrt(2); |grad p2| = sqrt(2) there, and
  // p1 is homogeneous of degree 1, so everything reduces to the unit sphere:
  // integral = sqrt(2)^{2d-1} * int_{S^{2d-1}} p1(theta) dtheta.
  SphereGrid grid = SphereGrid::make(s.d, spec.order_radial, spec.order_angular);
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    PhasePoint p = PhasePoint::unpack(grid.nodes[i]);
    double p1 = s.has_degree(1) ? s.degree_part(1, p) : 0.0;
    acc += grid.weights[i] * p1;
  }
  return std::pow(kTwoPi, -s.d) * std::pow(std::sqrt(2.0), 2 * s.d - 1) * acc;
}

double surface_integral_p0(const Symbol& s, double lambda, const RadialQuadratureSpec& spec) {
  s.validate();
  if (!s.principal_is_oscillator)
    throw PreconditionError("surface_integral_p0: principal part must be the oscillator");
  if (s.d > 2) throw PreconditionError("surface_integral_p0 supports d <= 2");
  if (!s.has_degree(0)) return 0.0;
  SphereGrid grid = SphereGrid::make(s.d, spec.order_radial, spec.order_angular);
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    PhasePoint p = PhasePoint::unpack(grid.nodes[i]);
    acc += grid.weights[i] * s.degree_part(0, p);
  }
  return std::pow(kTwoPi, -s.d) * std::pow(2.0 * lambda, s.d - 1) * acc;
}

}  // namespace isospec
