#pragma once

// Exact rational forms of the stencil coefficient tables. Doubles used by the
// reconstruction are rounded from these.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wenolab::exact {

using Rational = boost::multiprecision::cpp_rational;

/// Mean of xi^l over the cell [j - 1/2, j + 1/2].
Rational cell_moment(int j, int l);

/// Inverse of the cell-moment matrix for cells first..first+n-1: maps n averages to n coefficients.
/// Row-major, entry [l * n + m].
std::vector<Rational> average_to_coeffs(int first, int n);

/// Bilinear-form smoothness matrix for degree q, q*q row-major.
std::vector<Rational> smoothness_matrix(int q);

/// Linear WENO weights d_1..d_r at xi; empty if no exact solution exists.
std::vector<Rational> weno_linear_weights(int r, const Rational& xi);

}  // namespace wenolab::exact
