#include "isospec/wavepacket.hpp"

#include <cmath>
#include <complex>

#include "isospec/flow.hpp"
#include "isospec/hermite.hpp"
#include "isospec/symbol.hpp"

namespace isospec {

namespace {

constexpr double kTwoPi = 6.283185307179586477;
using cplx = std::complex<double>;

// <psi_m, u0> for the 1D Gaussian packet u0 = (pi w^2)^{-1/4}
// exp(-x^2 / 2w^2) exp(i xi0 x), m = 0..cap.
std::vector<cplx> packet_coefficients(double xi0, double width, int cap) {
  std::vector<cplx> coef(cap + 1);
  if (std::abs(width - 1.0) < 1e-14) {
    cplx gamma(0.0, xi0 / std::sqrt(2.0));
    cplx cur = std::exp(-0.25 * xi0 * xi0);  // e^{-|gamma|^2/2}
    for (int m = 0; m <= cap; ++m) {
      coef[m] = cur;
      cur *= gamma / std::sqrt(double(m + 1));
    }
    return coef;
  }
  // general width by exact Gauss-Hermite on the shifted contour
  double A = 0.5 * (1.0 + 1.0 / (width * width));
  GaussHermite gh = GaussHermite::make(cap / 2 + 8);
  cplx shift(0.0, xi0 / (2.0 * A));
  double norm = std::pow(3.141592653589793238 * width * width, -0.25);
  cplx pref = norm * std::exp(-xi0 * xi0 / (4.0 * A)) / std::sqrt(A);
  for (int k = 0; k < gh.nodes.size(); ++k) {
    cplx arg = gh.nodes[k] / std::sqrt(A) + shift;
    // polynomial part of psi: psi_m(z) e^{z^2/2}
    Eigen::VectorXcd psi = hermite_functions(cap, arg);
    cplx regauss = std::exp(0.5 * arg * arg);
    for (int m = 0; m <= cap; ++m) coef[m] += gh.weights[k] * psi[m] * regauss * pref;
  }
  return coef;
}

int choose_cap(const std::vector<cplx>& coef, double budget) {
  double total = 0.0;
  for (const auto& c : coef) total += std::norm(c);
  double acc = 0.0;
  for (int m = 0; m < int(coef.size()); ++m) {
    acc += std::norm(coef[m]);
    if (acc >= total - budget) return m;
  }
  return int(coef.size()) - 1;
}

}  // namespace

ShiftReport wavepacket_shift(const Eigen::VectorXd& c, const std::vector<int>& n_list,
                             const Eigen::VectorXd& xi0, double width) {
  int d = int(c.size());
  if (xi0.size() != d) throw PreconditionError("wavepacket_shift: xi0 dimension mismatch");
  if (!(width > 0)) throw PreconditionError("wavepacket_shift: width > 0");
  if (n_list.empty()) throw PreconditionError("wavepacket_shift: empty n list");
  if (c.cwiseAbs().maxCoeff() >= 1.0)
    throw PreconditionError("wavepacket_shift: diagonal model needs max |c_j| < 1");

  // per-dimension packet expansion, capped where 1 - 1e-9/d of the mass sits
  std::vector<std::vector<cplx>> coef(d);
  std::vector<int> cap(d);
  std::size_t box = 1;
  for (int j = 0; j < d; ++j) {
    double g2 = 0.5 * xi0[j] * xi0[j];  // mean level of the coherent packet
    int guess = int(g2 + 12.0 * std::sqrt(g2 + 1.0) + 40.0);
    coef[j] = packet_coefficients(xi0[j], width, guess);
    cap[j] = choose_cap(coef[j], 1e-9 / d);
    coef[j].resize(cap[j] + 1);
    box *= std::size_t(cap[j] + 1);
  }
  if (box > 4'000'000) throw NumericalError("wavepacket_shift: basis box beyond budget");

  // flat enumeration of the index box
  std::vector<Eigen::VectorXi> alphas;
  alphas.reserve(box);
  Eigen::VectorXi a = Eigen::VectorXi::Zero(d);
  for (;;) {
    alphas.push_back(a);
    int j = d - 1;
    while (j >= 0) {
      if (++a[j] <= cap[j]) break;
      a[j] = 0;
      --j;
    }
    if (j < 0) break;
  }

  std::vector<cplx> base(alphas.size());
  double mass = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    cplx v = 1.0;
    for (int j = 0; j < d; ++j) v *= coef[j][alphas[i][j]];
    base[i] = v;
    mass += std::norm(v);
  }
  if (mass < 1.0 - 1e-6)
    throw NumericalError("wavepacket_shift: basis truncation leaks " +
                         std::to_string(1.0 - mass) + " of the packet mass");

  // index lookup for alpha + e_j neighbours (mixed-radix strides)
  std::vector<std::size_t> stride(d, 1);
  for (int j = d - 2; j >= 0; --j) stride[j] = stride[j + 1] * std::size_t(cap[j + 1] + 1);

  auto centroid = [&](const std::vector<cplx>& coefs) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      for (int j = 0; j < d; ++j) {
        if (alphas[i][j] + 1 > cap[j]) continue;
        std::size_t nb = i + stride[j];
        double ladder = std::sqrt(0.5 * (alphas[i][j] + 1));
        x[j] += 2.0 * (std::conj(coefs[i]) * coefs[nb]).real() * ladder;
      }
    }
    return x;
  };

  Eigen::VectorXd before = centroid(base);

  // prediction: n * grad_xi (X p1)(0, xi0) by quadrature + central differences
  HomogeneousTerm p1 = hopf_pullback(c);
  PhaseFunction f = [&p1](const PhasePoint& p) { return p1.value(p); };
  double h = 1e-5 * std::max(1.0, xi0.norm());
  Eigen::VectorXd grad_xp1(d);
  for (int j = 0; j < d; ++j) {
    Eigen::VectorXd xp = xi0, xm = xi0;
    xp[j] += h;
    xm[j] -= h;
    double fp = xray_average(f, PhasePoint{Eigen::VectorXd::Zero(d), xp});
    double fm = xray_average(f, PhasePoint{Eigen::VectorXd::Zero(d), xm});
    grad_xp1[j] = (fp - fm) / (2.0 * h);
  }

  ShiftReport rep;
  rep.n_list = n_list;
  rep.mass_retained = mass;
  std::vector<cplx> evolved(alphas.size());
  for (int n : n_list) {
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      double level = alphas[i].sum() + 0.5 * d;
      double shift = 0.0;
      for (int j = 0; j < d; ++j) shift += c[j] * (alphas[i][j] + 0.5);
      double phase = -kTwoPi * n * shift / std::sqrt(level);
      evolved[i] = base[i] * std::polar(1.0, phase);
    }
    Eigen::VectorXd after = centroid(evolved);
    rep.measured.push_back(after - before);
    rep.predicted.push_back(double(n) * grad_xp1);
  }

  double worst = 0.0;
  for (std::size_t k = 0; k < rep.measured.size(); ++k) {
    double scale = rep.predicted[k].norm();
    if (scale > 0) worst = std::max(worst, (rep.measured[k] - rep.predicted[k]).norm() / scale);
  }
  rep.max_rel_dev = worst;

  double lin = 0.0;
  Eigen::VectorXd unit = rep.measured[0] / double(rep.n_list[0]);
  for (std::size_t k = 1; k < rep.measured.size(); ++k) {
    Eigen::VectorXd per_n = rep.measured[k] / double(rep.n_list[k]);
    if (unit.norm() > 0) lin = std::max(lin, (per_n - unit).norm() / unit.norm());
  }
  rep.linearity_dev = lin;
  return rep;
}

}  // namespace isospec
