#pragma once

#include <vector>

#include "wenolab/recon.hpp"

namespace wenolab::detail {

/// Double-precision coefficient tables for one substencil width r, rounded from exact rationals.
struct StencilTables {
  int r = 0;
  /// sub[k-1]: r*r row-major, coefficient l of P_k from the r averages of S_k.
  std::vector<std::vector<double>> sub;
  /// (2r-1)^2 row-major, coefficient l of P_opt from the full window.
  std::vector<double> opt;
  /// Folded smoothness forms over coefficients a_0..a_q: entry [i][j] = C_ij i! j! (row/col 0 zero).
  std::vector<double> folded_sub;  // q = r-1, (r)^2
  std::vector<double> folded_opt;  // q = 2r-2, (2r-1)^2
  /// WENO linear weights d_1..d_r at xi = -1/2 and xi = +1/2.
  std::vector<double> weno_left;
  std::vector<double> weno_right;
};

/// Tables are built once per r and shared; thread-safe.
const StencilTables& stencil_tables(int r);

/// Folded form over coefficients for an arbitrary degree q, (q+1)^2 row-major.
std::vector<double> folded_smoothness(int q);

}  // namespace wenolab::detail
