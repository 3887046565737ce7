#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "isospec/flow.hpp"

namespace isospec {

// Closed grammar of homogeneous terms.  Keeping the grammar finite (instead
// of arbitrary callables) makes exact scaling tests, analytic gradients and
// exact flow averages available for every representable symbol.
enum class TermKind {
  QuadraticForm,      // w^T Q w,           degree 2
  LinearForm,         // <b, w>,            degree 1
  RadialPower,        // coeff * p2^(deg/2), degree 0,1,2
  QuadraticOverRoot,  // w^T Q w / |w|,     degree 1   (|w| = sqrt(2 p2))
  Constant,           // coeff,             degree 0
};

std::string term_kind_name(TermKind k);
TermKind term_kind_from_name(const std::string& name);

struct HomogeneousTerm {
  int degree = 0;
  TermKind kind = TermKind::Constant;
  Eigen::MatrixXd Q;  // QuadraticForm / QuadraticOverRoot
  Eigen::VectorXd b;  // LinearForm
  double coeff = 0.0; // RadialPower / Constant

  // Throws PreconditionError if the kind/degree combination is invalid or a
  // matrix is asymmetric beyond 1e-14.
  void validate(int d) const;

  double value(const PhasePoint& p) const;
  // Euclidean gradient in packed coordinates w = (x, xi).
  Eigen::VectorXd gradient(const PhasePoint& p) const;

  // Exact average over one flow period: X(term) as a term of the same kind.
  // Linear forms average to zero (returned as a zero linear form).
  HomogeneousTerm xray() const;

  bool singular_at_origin() const;
};

struct Symbol {
  int d = 1;
  std::vector<HomogeneousTerm> terms;
  bool principal_is_oscillator = false;

  static Symbol oscillator(int d);                    // p2 alone
  static Symbol oscillator_plus(int d, const HomogeneousTerm& p1);

  void validate() const;
  void refresh_flags();  // recompute principal_is_oscillator

  double value(const PhasePoint& p) const;
  Eigen::VectorXd gradient(const PhasePoint& p) const;

  double degree_part(int degree, const PhasePoint& p) const;
  Eigen::VectorXd degree_part_gradient(int degree, const PhasePoint& p) const;
  bool has_degree(int degree) const;

  nlohmann::json to_json() const;
  static Symbol from_json(const nlohmann::json& j);
};

// p1 = (sum_j c_j (x_j^2 + xi_j^2)/2) / sqrt(p2): the degree-1 term whose
// sphere restriction is pulled back from a function of |z_j|^2 on CP^{d-1}.
// Represented as QuadraticOverRoot with Q = diag(c, c)/sqrt(2).
HomogeneousTerm hopf_pullback(const Eigen::VectorXd& c);

// coeff * p2^(degree/2)
HomogeneousTerm radial_power(double coeff, int degree);

}  // namespace isospec
