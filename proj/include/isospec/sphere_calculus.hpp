#pragma once

#include <functional>

#include <Eigen/Dense>

#include "isospec/errors.hpp"

namespace isospec {

using AmbientFunction = std::function<double(const Eigen::VectorXd&)>;

// Orthonormal basis of the tangent space of S^{n-1} at unit vector w,
// returned as an n x (n-1) matrix of columns.
Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& w);

struct SphereDerivatives {
  Eigen::VectorXd gradient;  // coordinates in the tangent frame
  Eigen::MatrixXd hessian;   // intrinsic Hessian in the tangent frame
  Eigen::MatrixXd frame;     // the frame used
};

// Intrinsic gradient and Hessian of f restricted to the unit sphere, by
// central differences along retracted (renormalized) tangent lines.  The
// retraction makes the second difference pick up the curvature correction
// Hess_S f = Hess f - <grad f, w> I automatically.
// Requires |w| = 1 within 1e-12; throws PreconditionError otherwise.
SphereDerivatives sphere_grad_hess(const AmbientFunction& f, const Eigen::VectorXd& w,
                                   double step = 1e-5,
                                   const Eigen::MatrixXd* frame = nullptr);

// Gradient only (cheaper stencil).
Eigen::VectorXd sphere_gradient(const AmbientFunction& f, const Eigen::VectorXd& w,
                                double step = 1e-5,
                                const Eigen::MatrixXd* frame = nullptr);

}  // namespace isospec
