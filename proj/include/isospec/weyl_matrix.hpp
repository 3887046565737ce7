#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "isospec/symbol.hpp"

namespace isospec {

// Smooth radial cutoff: 0 on |w| <= 1, 1 on |w| >= 2, C-infinity between.
// Multiplies the singular degree-1 kinds before quadrature; the modified
// operator differs by a term invisible to the spectral asymptotics.
double singular_cutoff(double r);

struct WeylMatrixResult {
  Eigen::MatrixXcd matrix;  // Hermitian in the Hermite basis
  double tail_error_estimate = 0.0;
  std::vector<Eigen::VectorXi> basis;  // multi-indices, level-major lexicographic

  // For symbols even in xi the matrix is real; throws if imaginary parts
  // exceed tol.
  Eigen::MatrixXd real_symmetric(double tol = 1e-9) const;
};

// Matrix of Op_W(symbol) on the Hermite basis of levels <= n_max (d <= 2).
// Entries are phase-space pairings of the symbol against cross-Wigner
// functions of Hermite pairs.  Polynomial kinds go through tensorized
// Gauss-Hermite quadrature (exact at the automatic order); cutoff-
// regularized singular kinds go through an exact angular reduction, leaving
// smooth radial integrals on panel rules.
WeylMatrixResult weyl_matrix(const Symbol& s, int n_max, int quad_order = 0,
                             int radial_panels = 64);

// Same pairing for a batch of raw phase-space functions a(x, xi) in one
// sweep over the quadrature grid (d = 1).  Exact for polynomials of degree
// <= 2*(quad_order - 1) - 2*n_max; used to check arbitrary monomials against
// the ladder route.
std::vector<Eigen::MatrixXcd> weyl_pairing_1d(
    const std::vector<std::function<double(double, double)>>& symbols, int n_max,
    int quad_order);

// Convergence probe per the error contract: recompute a sample of entries at
// doubled order and throw NumericalError naming the worst entry if any entry
// moves by more than 1e-7.
void verify_weyl_quadrature(const Symbol& s, int n_max, int quad_order = 0);

}  // namespace isospec
