#pragma once

#include <Eigen/Dense>

#include "isospec/errors.hpp"

namespace isospec {

// Hermite-basis matrices of the 1D ladder algebra on span(psi_0..psi_n).
// x couples n <-> n+1 with raising element sqrt((n+1)/2).
Eigen::MatrixXd position_matrix(int n_max);    // symmetric
Eigen::MatrixXd derivative_matrix(int n_max);  // d/dx, antisymmetric
Eigen::MatrixXcd momentum_matrix(int n_max);   // D = -i d/dx, Hermitian

// Op_W(x^a xi^b) on span(psi_0..psi_n), via symmetric (Weyl) operator
// ordering: 2^{-a} sum_k binom(a,k) x^k D^b x^{a-k}.  Products are formed on
// a basis padded by a+b levels so the truncation is exact on the returned
// block.
Eigen::MatrixXcd weyl_monomial_matrix_1d(int a, int b, int n_max);

}  // namespace isospec
