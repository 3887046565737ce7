#include "isospec/weyl_matrix.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "isospec/hermite.hpp"
#include "isospec/parallel.hpp"

namespace isospec {

namespace {

constexpr double kPi = 3.141592653589793238;

double bump01(double s) {  // C-infinity, 0 at s<=0, 1 at s>=1
  if (s <= 0) return 0.0;
  if (s >= 1) return 1.0;
  double a = std::exp(-1.0 / s);
  double b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

double symbol_poly_value(const Symbol& s, const Eigen::VectorXd& w) {
  PhasePoint p = PhasePoint::unpack(w);
  double acc = 0.0;
  for (const auto& t : s.terms)
    if (!t.singular_at_origin()) acc += t.value(p);
  return acc;
}

bool has_singular(const Symbol& s) {
  for (const auto& t : s.terms)
    if (t.singular_at_origin()) return true;
  return false;
}

// scaled Laguerre profiles f_j^{(k)}(y) for j + k <= n_max at fixed y
// (the radial parts of the cross-Wigner functions)
void laguerre_profiles(int n_max, double y, Eigen::MatrixXd& f) {
  f.setZero(n_max + 1, n_max + 1);  // f(j, k)
  for (int k = 0; k <= n_max; ++k) {
    double lf0 = 0.5 * k * std::log(std::max(y, 1e-300)) - 0.5 * y - 0.5 * std::lgamma(k + 1.0);
    double fjm1 = 0.0;
    double fj = std::exp(lf0);
    for (int j = 0; j + k <= n_max; ++j) {
      f(j, k) = fj;
      double fnext = ((2.0 * j + k + 1.0 - y) * fj - std::sqrt(double(j) * (j + k)) * fjm1) /
                     std::sqrt(double(j + 1) * (j + 1 + k));
      fjm1 = fj;
      fj = fnext;
    }
  }
}

// Radial panels for integrals against the cutoff: piecewise Gauss-Legendre
// with panel boundaries pinned at the cutoff seams r = 1, 2 (the bump is
// analytic strictly inside each panel).
struct RadialRule {
  std::vector<double> nodes, weights;
  RadialRule(double r_max, int panels_per_unit) {  // panels per unit length
    static const double gx[8] = {-0.96028985649753623168, -0.79666647741362673959,
                                 -0.52553240991632898582, -0.18343464249564980494,
                                 0.18343464249564980494,  0.52553240991632898582,
                                 0.79666647741362673959,  0.96028985649753623168};
    static const double gw[8] = {0.10122853629037625915, 0.22238103445337447054,
                                 0.31370664587788728734, 0.36268378337836198297,
                                 0.36268378337836198297, 0.31370664587788728734,
                                 0.22238103445337447054, 0.10122853629037625915};
    std::vector<double> seams = {1.0, 2.0, r_max};
    double lo = 1.0;  // cutoff vanishes below r = 1
    for (double hi : seams) {
      if (hi <= lo) continue;
      int np = std::max(1, int((hi - lo) * panels_per_unit));
      double h = (hi - lo) / np;
      for (int p = 0; p < np; ++p) {
        double c = lo + (p + 0.5) * h;
        for (int k = 0; k < 8; ++k) {
          nodes.push_back(c + 0.5 * h * gx[k]);
          weights.push_back(0.5 * h * gw[k]);
        }
      }
      lo = hi;
    }
  }
};

// d=1 quantization of the cutoff-regularized singular kinds by exact
// angular reduction: a = zeta(r) r q(theta) has only Fourier channels
// |m - n| in {0, 2} against the cross-Wigner phases, leaving smooth 1D
// radial integrals.
Eigen::MatrixXcd singular_matrix_polar_1d(const Symbol& s, int n_max, int panels_per_unit) {
  // angular data: q(theta) = q0 + qc cos 2theta + qs sin 2theta per term,
  // summed over singular terms (radial_power deg 1 contributes only q0)
  double q0 = 0.0, qc = 0.0, qs = 0.0;
  for (const auto& t : s.terms) {
    if (!t.singular_at_origin()) continue;
    if (t.kind == TermKind::QuadraticOverRoot) {
      q0 += 0.5 * (t.Q(0, 0) + t.Q(1, 1));
      qc += 0.5 * (t.Q(0, 0) - t.Q(1, 1));
      qs += t.Q(0, 1);
    } else {  // radial_power, degree 1: coeff * r / sqrt(2)
      q0 += t.coeff / std::sqrt(2.0);
    }
  }

  double r_max = std::sqrt(2.0 * n_max + 60.0);
  RadialRule rule(r_max, std::max(8, panels_per_unit));

  // R0[n] = int zeta r^2 f_n^{(0)}(2 r^2) dr, R2[n] = same with f_n^{(2)}
  Eigen::VectorXd r0v = Eigen::VectorXd::Zero(n_max + 1);
  Eigen::VectorXd r2v = Eigen::VectorXd::Zero(n_max + 1);
  Eigen::MatrixXd prof;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double r = rule.nodes[i];
    double zeta = singular_cutoff(r);
    if (zeta == 0.0) continue;
    laguerre_profiles(n_max, 2.0 * r * r, prof);
    double wgt = rule.weights[i] * zeta * r * r;
    for (int n = 0; n <= n_max; ++n) r0v[n] += wgt * prof(n, 0);
    for (int n = 0; n + 2 <= n_max; ++n) r2v[n] += wgt * prof(n, 2);
  }

  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n_max + 1, n_max + 1);
  const std::complex<double> a2(qc * kPi, qs * kPi);  // int q e^{2 i theta} dtheta
  for (int n = 0; n <= n_max; ++n) {
    double sign = (n % 2 == 0) ? 1.0 : -1.0;
    e(n, n) = sign / kPi * (2.0 * kPi * q0) * r0v[n];
    if (n + 2 <= n_max) {
      std::complex<double> val = sign / kPi * a2 * r2v[n];
      e(n + 2, n) = val;
      e(n, n + 2) = std::conj(val);
    }
  }
  return e;
}

int polynomial_degree(const Symbol& s) {
  int deg = 0;
  for (const auto& t : s.terms)
    if (!t.singular_at_origin()) deg = std::max(deg, t.degree);
  return deg;
}

// d=2 quantization of the cutoff-regularized singular kinds.  In per-pair
// polar coordinates the cross-Wigner kernel factorizes into radial Laguerre
// profiles times e^{i (m_j - n_j) theta_j}, and a quadratic numerator only
// feeds the Fourier channels (d1, d2) in {(0,0), (+-2,0), (0,+-2),
// (+-1,+-1)}.  The remaining radial double integrals against zeta(R)/R are
// factored contractions over a shared tensor grid.
Eigen::MatrixXcd singular_matrix_polar_2d(const Symbol& s, int n_max,
                                          const std::vector<Eigen::VectorXi>& basis,
                                          int panels_per_unit) {
  using cplx = std::complex<double>;
  // combined angular data over singular terms (packed order x1, x2, xi1, xi2)
  Eigen::Matrix4d qs = Eigen::Matrix4d::Zero();
  double c_r = 0.0;
  for (const auto& t : s.terms) {
    if (!t.singular_at_origin()) continue;
    if (t.kind == TermKind::QuadraticOverRoot)
      qs += t.Q;
    else
      c_r += t.coeff / std::sqrt(2.0);
  }

  // radial axis rule on [0, r_max]
  double r_max = std::sqrt(2.0 * n_max + 50.0);
  static const double gx[8] = {-0.96028985649753623168, -0.79666647741362673959,
                               -0.52553240991632898582, -0.18343464249564980494,
                               0.18343464249564980494,  0.52553240991632898582,
                               0.79666647741362673959,  0.96028985649753623168};
  static const double gw[8] = {0.10122853629037625915, 0.22238103445337447054,
                               0.31370664587788728734, 0.36268378337836198297,
                               0.36268378337836198297, 0.31370664587788728734,
                               0.22238103445337447054, 0.10122853629037625915};
  int panels = std::max(8, int(r_max * panels_per_unit));
  int nr = panels * 8;
  Eigen::VectorXd rn(nr), rw(nr);
  {
    double h = r_max / panels;
    int idx = 0;
    for (int p = 0; p < panels; ++p) {
      double c = (p + 0.5) * h;
      for (int k = 0; k < 8; ++k, ++idx) {
        rn[idx] = c + 0.5 * h * gx[k];
        rw[idx] = 0.5 * h * gw[k];
      }
    }
  }

  // Laguerre profile tables F[k](m, i) for k = 0, 1, 2
  std::array<Eigen::MatrixXd, 3> F;
  for (auto& f : F) f.setZero(n_max + 1, nr);
  {
    Eigen::MatrixXd prof;
    for (int i = 0; i < nr; ++i) {
      laguerre_profiles(n_max, 2.0 * rn[i] * rn[i], prof);
      for (int k = 0; k <= 2; ++k)
        for (int m = 0; m + k <= n_max; ++m) F[k](m, i) = prof(m, k);
    }
  }

  // shared grid factors
  Eigen::MatrixXd gq(nr, nr), gr(nr, nr);
  bool any_q = qs.cwiseAbs().maxCoeff() > 0.0;
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nr; ++j) {
      double R = std::hypot(rn[i], rn[j]);
      double zeta = singular_cutoff(R);
      gq(i, j) = (zeta > 0.0 && R > 0.0) ? zeta / R : 0.0;
      gr(i, j) = zeta * R;
    }
  }

  // contraction M[k1, k2](m1, m2) = sum_ij F[k1](m1,i) u1_i g(i,j) u2_j F[k2](m2,j)
  auto contract = [&](int k1, int k2, int p1, int p2, const Eigen::MatrixXd& g) {
    Eigen::MatrixXd f1 = F[k1];
    Eigen::MatrixXd f2 = F[k2];
    for (int i = 0; i < nr; ++i) {
      double u1 = rw[i] * std::pow(rn[i], 1 + p1);
      f1.col(i) *= u1;
      double u2 = rw[i] * std::pow(rn[i], 1 + p2);
      f2.col(i) *= u2;
    }
    return Eigen::MatrixXd(f1 * g * f2.transpose());
  };

  Eigen::MatrixXd m00_1, m00_2, m00_r, m20, m02, m11;
  if (any_q) {
    m00_1 = contract(0, 0, 2, 0, gq);
    m00_2 = contract(0, 0, 0, 2, gq);
    m20 = contract(2, 0, 2, 0, gq);
    m02 = contract(0, 2, 0, 2, gq);
    m11 = contract(1, 1, 1, 1, gq);
  }
  if (c_r != 0.0) m00_r = contract(0, 0, 0, 0, gr);

  // angular channel values; single-pair channels carry 2 pi from the
  // integral over the untouched angle
  const double pi2 = kPi * kPi;
  double a00_1 = 2.0 * pi2 * (qs(0, 0) + qs(2, 2));
  double a00_2 = 2.0 * pi2 * (qs(1, 1) + qs(3, 3));
  cplx a20 = 2.0 * pi2 * cplx(0.5 * (qs(0, 0) - qs(2, 2)), qs(0, 2));
  cplx a02 = 2.0 * pi2 * cplx(0.5 * (qs(1, 1) - qs(3, 3)), qs(1, 3));
  double al = 2.0 * qs(0, 1), be = 2.0 * qs(0, 3), ga = 2.0 * qs(2, 1), de = 2.0 * qs(2, 3);
  cplx a11 = pi2 * cplx(al - de, be + ga);   // channel (+1, +1)
  cplx a1m1 = pi2 * cplx(al + de, ga - be);  // channel (+1, -1)

  int dim = int(basis.size());
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(dim, dim);
  auto find = [&](int a1, int a2) {
    if (a1 < 0 || a2 < 0 || a1 + a2 > n_max) return -1;
    // level-major lexicographic position
    int level = a1 + a2;
    int before = level * (level + 1) / 2;  // sum of sizes of lower levels
    return before + a1;
  };
  for (int col = 0; col < dim; ++col) {
    int b1 = basis[col][0], b2 = basis[col][1];
    auto add = [&](int d1, int d2, cplx aval, const Eigen::MatrixXd& mt) {
      if (aval == cplx(0.0, 0.0)) return;
      int a1 = b1 + d1, a2 = b2 + d2;
      int row = find(a1, a2);
      if (row < 0) return;
      int m1 = std::min(a1, b1), m2 = std::min(a2, b2);
      double sign = ((m1 + m2) % 2 == 0) ? 1.0 : -1.0;
      cplx v = (sign / pi2) * aval * mt(m1, m2);
      e(row, col) += v;
      if (row != col) e(col, row) += std::conj(v);
    };
    if (any_q) {
      add(0, 0, cplx(a00_1, 0.0), m00_1);
      add(0, 0, cplx(a00_2, 0.0), m00_2);
      add(2, 0, a20, m20);
      add(0, 2, a02, m02);
      add(1, 1, a11, m11);
      add(1, -1, a1m1, m11);
    }
    if (c_r != 0.0) add(0, 0, cplx(4.0 * pi2 * c_r, 0.0), m00_r);
  }
  return e;
}

// Cross-Wigner values W(psi_n, psi_m)(x, xi) for all m, n <= n_max at one
// phase-space point, via the closed Laguerre form: for m = n + k,
//   W(psi_m, psi_n) = ((-1)^n / pi) sqrt(n!/m!) (sqrt(2) zbar)^k
//                     L_n^{(k)}(2 r^2) e^{-r^2},  zbar = x - i xi,
// and W(psi_n, psi_m) is its conjugate.  The scaled Laguerre profile
//   f_j^{(k)}(y) = sqrt(j!/(j+k)!) y^{k/2} e^{-y/2} L_j^{(k)}(y)
// is an orthonormal-family value (bounded), computed by a symmetric
// three-term recurrence; no cancellation blow-up at large |xi|.
// Returned matrix: B(m, n) = W(psi_n, psi_m), the pairing kernel for
// <psi_m, Op_W(a) psi_n>.
Eigen::MatrixXcd wigner_point(int n_max, double x, double xi) {
  int nb = n_max + 1;
  double r2 = x * x + xi * xi;
  double y = 2.0 * r2;
  std::complex<double> zbar_hat(1.0, 0.0);
  if (r2 > 0) zbar_hat = std::complex<double>(x, -xi) / std::sqrt(r2);

  Eigen::MatrixXcd b(nb, nb);
  std::complex<double> phase_k(1.0, 0.0);  // zbar_hat^k
  for (int k = 0; k <= n_max; ++k) {
    // f_0^{(k)}(y) = y^{k/2} e^{-y/2} / sqrt(k!)
    double lf0 = 0.5 * k * std::log(std::max(y, 1e-300)) - 0.5 * y - 0.5 * std::lgamma(k + 1.0);
    double fjm1 = 0.0;
    double fj = (y <= 0.0 && k > 0) ? 0.0 : std::exp(lf0);
    for (int j = 0; j + k <= n_max; ++j) {
      int m = j + k, n = j;
      double sign = (n % 2 == 0) ? 1.0 : -1.0;
      std::complex<double> w_mn = (sign / kPi) * fj * phase_k;  // W(psi_m, psi_n)
      b(n, m) = w_mn;             // B(n, m) = W(psi_m, psi_n)
      b(m, n) = std::conj(w_mn);  // B(m, n) = W(psi_n, psi_m)
      double fnext = ((2.0 * j + k + 1.0 - y) * fj - std::sqrt(double(j) * (j + k)) * fjm1) /
                     std::sqrt(double(j + 1) * (j + 1 + k));
      fjm1 = fj;
      fj = fnext;
    }
    phase_k *= zbar_hat;
  }
  return b;
}

// pairing tables for one (x, xi) pair of dimensions, column-major over pair
// nodes: T[(m,n), p] = B(m, n)(x_p, xi_p) * w_x w_xi e^{x^2 + xi^2}
Eigen::MatrixXcd wigner_table(int n_max, const GaussHermite& phase) {
  int nb = n_max + 1;
  int q = int(phase.nodes.size());
  int npair = q * q;
  Eigen::MatrixXcd table(nb * nb, npair);
  parallel_for(q, [&](std::size_t ix) {
    double x = phase.nodes[ix];
    double wx = phase.weights[ix] * std::exp(x * x);
    for (int jxi = 0; jxi < q; ++jxi) {
      double xi = phase.nodes[jxi];
      double wxi = phase.weights[jxi] * std::exp(xi * xi);
      Eigen::MatrixXcd b = wigner_point(n_max, x, xi) * (wx * wxi);
      table.col(ix * q + jxi) = Eigen::Map<Eigen::VectorXcd>(b.data(), nb * nb);
    }
  });
  return table;
}

}  // namespace

double singular_cutoff(double r) { return bump01(r - 1.0); }

std::vector<Eigen::MatrixXcd> weyl_pairing_1d(
    const std::vector<std::function<double(double, double)>>& symbols, int n_max,
    int quad_order) {
  if (quad_order < n_max + 2) throw PreconditionError("weyl_pairing_1d: quadrature order too low");
  GaussHermite phase = GaussHermite::make(quad_order);
  int nb = n_max + 1;
  std::size_t ns = symbols.size();

  // per x-node partial accumulators, summed in fixed order afterwards
  std::vector<std::vector<Eigen::MatrixXcd>> partial(phase.nodes.size());
  parallel_for(std::size_t(phase.nodes.size()), [&](std::size_t ix) {
    double x = phase.nodes[ix];
    double wx = phase.weights[ix] * std::exp(x * x);
    std::vector<Eigen::MatrixXcd> acc(ns, Eigen::MatrixXcd::Zero(nb, nb));
    std::vector<double> avals(ns);
    for (int jxi = 0; jxi < int(phase.nodes.size()); ++jxi) {
      double xi = phase.nodes[jxi];
      bool any = false;
      for (std::size_t f = 0; f < ns; ++f) {
        avals[f] = symbols[f](x, xi);
        if (avals[f] != 0.0) any = true;
      }
      if (!any) continue;
      double c = wx * phase.weights[jxi] * std::exp(xi * xi);
      Eigen::MatrixXcd block = wigner_point(n_max, x, xi);
      for (std::size_t f = 0; f < ns; ++f)
        if (avals[f] != 0.0) acc[f] += (c * avals[f]) * block;
    }
    partial[ix] = std::move(acc);
  });

  std::vector<Eigen::MatrixXcd> out(ns, Eigen::MatrixXcd::Zero(nb, nb));
  for (const auto& per_node : partial)
    for (std::size_t f = 0; f < ns; ++f) out[f] += per_node[f];
  for (auto& m : out) m = 0.5 * (m + m.adjoint()).eval();
  return out;
}

Eigen::MatrixXd WeylMatrixResult::real_symmetric(double tol) const {
  double max_im = matrix.imag().cwiseAbs().maxCoeff();
  double scale = std::max(1.0, matrix.real().cwiseAbs().maxCoeff());
  if (max_im > tol * scale)
    throw NumericalError("weyl matrix has imaginary parts beyond tolerance");
  return matrix.real();
}

WeylMatrixResult weyl_matrix(const Symbol& s, int n_max, int quad_order, int radial_panels) {
  s.validate();
  if (s.d > 2) throw PreconditionError("weyl_matrix: d <= 2 only");
  if (n_max < 0) throw PreconditionError("weyl_matrix: n_max >= 0");

  int deg = polynomial_degree(s);
  bool singular = has_singular(s);
  int q = quad_order;
  if (q == 0) q = n_max + deg / 2 + 4;

  // memory guard: the pairing tables hold (n_max+1)^2 x q^2 complex entries
  double mem = double(n_max + 1) * (n_max + 1) * double(q) * q * 16.0;
  if (s.d == 2 && mem > 2.5e9)
    throw PreconditionError("weyl_matrix: n_max * basis size beyond memory budget");

  GaussHermite phase = GaussHermite::make(q);

  WeylMatrixResult out;
  out.basis = multi_indices_up_to(n_max, s.d);
  int nb = n_max + 1;

  if (s.d == 1) {
    bool any_poly = false;
    for (const auto& t : s.terms)
      if (!t.singular_at_origin()) any_poly = true;
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(nb, nb);
    if (any_poly) {
      std::vector<std::function<double(double, double)>> fns = {
          [&s](double x, double xi) {
            Eigen::VectorXd w(2);
            w << x, xi;
            return symbol_poly_value(s, w);
          }};
      e = weyl_pairing_1d(fns, n_max, q)[0];
    }
    if (singular) e += singular_matrix_polar_1d(s, n_max, radial_panels);
    out.matrix = 0.5 * (e + e.adjoint());
  } else {
    bool any_poly = false;
    for (const auto& t : s.terms)
      if (!t.singular_at_origin()) any_poly = true;
    int dim = int(out.basis.size());
    Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(dim, dim);
    if (any_poly) {
      // two-stage contraction over the two (x_j, xi_j) pairs
      Eigen::MatrixXcd table = wigner_table(n_max, phase);  // (nb^2) x (q^2)
      int npair = q * q;
      Eigen::MatrixXd A(npair, npair);
      parallel_for(npair, [&](std::size_t p1) {
        int i1 = int(p1) / q, j1 = int(p1) % q;
        Eigen::VectorXd w(4);
        for (int p2 = 0; p2 < npair; ++p2) {
          int i2 = p2 / q, j2 = p2 % q;
          w << phase.nodes[i1], phase.nodes[i2], phase.nodes[j1], phase.nodes[j2];
          A(p1, p2) = symbol_poly_value(s, w);
        }
      });
      Eigen::MatrixXcd D = table * A.cast<std::complex<double>>();   // (nb^2) x (q^2)
      Eigen::MatrixXcd full = D * table.transpose();                 // (nb^2) x (nb^2)
      // table columns hold B in column-major order, so pair (alpha_j, beta_j)
      // of dimension j sits at flat index beta_j * nb + alpha_j
      for (int r = 0; r < dim; ++r) {
        const auto& al = out.basis[r];
        for (int c2 = 0; c2 < dim; ++c2) {
          const auto& be = out.basis[c2];
          E(r, c2) = full(be[0] * nb + al[0], be[1] * nb + al[1]);
        }
      }
    }
    if (singular)
      E += singular_matrix_polar_2d(s, n_max, out.basis, std::max(4, radial_panels / 5));
    out.matrix = 0.5 * (E + E.adjoint());
  }

  // crude second-order bound on the truncation seen by eigenvalues at
  // levels <= n_max - 2B, from the coupling into the top B levels
  {
    int B = std::max(2, std::min(10, n_max / 4));
    double fro2 = 0.0;
    for (std::size_t r = 0; r < out.basis.size(); ++r) {
      int lr = out.basis[r].sum();
      if (lr > n_max - 2 * B) continue;
      for (std::size_t c2 = 0; c2 < out.basis.size(); ++c2) {
        int lc = out.basis[c2].sum();
        if (lc <= n_max - B) continue;
        fro2 += std::norm(out.matrix(r, c2));
      }
    }
    out.tail_error_estimate = fro2 / std::max(1, B);
  }
  return out;
}

void verify_weyl_quadrature(const Symbol& s, int n_max, int quad_order) {
  WeylMatrixResult a = weyl_matrix(s, n_max, quad_order);
  int q = quad_order;
  if (q == 0) q = n_max + polynomial_degree(s) / 2 + 4;
  WeylMatrixResult b = weyl_matrix(s, n_max, q + q / 2, 128);
  double worst = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < a.matrix.rows(); ++i)
    for (int j = 0; j < a.matrix.cols(); ++j) {
      double dev = std::abs(a.matrix(i, j) - b.matrix(i, j));
      if (dev > worst) {
        worst = dev;
        wi = i;
        wj = j;
      }
    }
  if (worst > 1e-7) {
    std::ostringstream msg;
    msg << "weyl quadrature not converged: entry (" << wi << "," << wj << ") moved " << worst
        << " on order refinement";
    throw NumericalError(msg.str());
  }
}

}  // namespace isospec
