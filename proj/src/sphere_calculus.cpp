#include "isospec/sphere_calculus.hpp"

#include <cmath>

namespace isospec {

namespace {

void check_unit(const Eigen::VectorXd& w) {
  if (std::abs(w.norm() - 1.0) > 1e-12)
    throw PreconditionError("sphere calculus requires a unit vector (|w|-1| <= 1e-12)");
}

inline Eigen::VectorXd retract(const Eigen::VectorXd& w) { return w / w.norm(); }

}  // namespace

Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& w) {
  int n = int(w.size());
  // Householder reflector mapping e_1 -> w; columns 2..n of the reflector
  // form an orthonormal tangent basis.
  Eigen::VectorXd v = w;
  v[0] += (w[0] >= 0 ? 1.0 : -1.0);
  v.normalize();
  Eigen::MatrixXd frame(n, n - 1);
  double sign = (w[0] >= 0 ? 1.0 : -1.0);
  for (int c = 1; c < n; ++c) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[c] = 1.0;
    frame.col(c - 1) = sign * (e - 2.0 * v * (v.dot(e)));
  }
  return frame;
}

Eigen::VectorXd sphere_gradient(const AmbientFunction& f, const Eigen::VectorXd& w,
                                double step, const Eigen::MatrixXd* frame_in) {
  check_unit(w);
  Eigen::MatrixXd frame = frame_in ? *frame_in : tangent_frame(w);
  int m = int(frame.cols());
  Eigen::VectorXd g(m);
  for (int i = 0; i < m; ++i) {
    double fp = f(retract(w + step * frame.col(i)));
    double fm = f(retract(w - step * frame.col(i)));
    g[i] = (fp - fm) / (2.0 * step);
  }
  return g;
}

SphereDerivatives sphere_grad_hess(const AmbientFunction& f, const Eigen::VectorXd& w,
                                   double step, const Eigen::MatrixXd* frame_in) {
  check_unit(w);
  SphereDerivatives out;
  out.frame = frame_in ? *frame_in : tangent_frame(w);
  const Eigen::MatrixXd& frame = out.frame;
  int m = int(frame.cols());
  double f0 = f(w);

  out.gradient.resize(m);
  out.hessian.resize(m, m);
  std::vector<double> fp(m), fm(m);
  for (int i = 0; i < m; ++i) {
    fp[i] = f(retract(w + step * frame.col(i)));
    fm[i] = f(retract(w - step * frame.col(i)));
    out.gradient[i] = (fp[i] - fm[i]) / (2.0 * step);
    out.hessian(i, i) = (fp[i] - 2.0 * f0 + fm[i]) / (step * step);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Eigen::VectorXd dir = frame.col(i) + frame.col(j);
      double fpp = f(retract(w + step * dir));
      double fmm = f(retract(w - step * dir));
      double mixed = (fpp - 2.0 * f0 + fmm) / (step * step);
      // (d_i + d_j)^2 = d_ii + d_jj + 2 d_ij
      double hij = 0.5 * (mixed - out.hessian(i, i) - out.hessian(j, j));
      out.hessian(i, j) = hij;
      out.hessian(j, i) = hij;
    }
  }
  return out;
}

}  // namespace isospec
