#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wenolab {

/// Explicit Runge-Kutta tableau; `a` is stages*stages row-major, strictly lower triangular.
struct RKTableau {
  std::string name;
  int stages = 0;
  int order = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;

  double A(int i, int j) const { return a[static_cast<std::size_t>(i) * stages + j]; }
  /// Throws std::invalid_argument unless explicit, sum(b) = 1 and c_i = sum_j a_ij (1e-14).
  void validate() const;
};

/// Three-stage third-order strong stability preserving scheme.
RKTableau ssprk3();
/// Six-stage fifth-order scheme of Butcher.
RKTableau rk5_butcher();
/// Built-in tableau for a spatial order: SSPRK3 for order <= 3, the fifth-order scheme otherwise.
RKTableau tableau_for_order(int spatial_order);

/// Reads a tableau from a text file.
///
///   # comment
///   name <text>
///   order <p>
///   stages <s>
///   a <s*s entries, row-major>
///   b <s entries>
///   c <s entries>
///
/// Entries may be decimals or fractions "p/q" and may span several lines.
RKTableau load_tableau(const std::string& path);
RKTableau parse_tableau(const std::string& text);

}  // namespace wenolab
