#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wenolab {

class InvalidExtent : public std::invalid_argument {
 public:
  explicit InvalidExtent(const std::string& what) : std::invalid_argument(what) {}
};

/// Uniform 1D mesh of `cells` cells on [x_lo, x_hi] with `ghost` ghost cells on each side.
class Grid {
 public:
  Grid(double x_lo, double x_hi, int cells, int ghost);

  double x_lo() const { return x_lo_; }
  double x_hi() const { return x_hi_; }
  int cells() const { return cells_; }
  int ghost() const { return ghost_; }
  /// Interior plus both ghost layers.
  int total() const { return cells_ + 2 * ghost_; }
  double h() const { return h_; }

  /// Left edge of cell j (j may be a ghost index, i.e. negative or >= cells()).
  double cell_lo(int j) const { return x_lo_ + j * h_; }
  double cell_hi(int j) const { return x_lo_ + (j + 1) * h_; }
  double center(int j) const { return x_lo_ + (j + 0.5) * h_; }

 private:
  double x_lo_;
  double x_hi_;
  int cells_;
  int ghost_;
  double h_;
};

Grid make_grid(double x_lo, double x_hi, int cells, int ghost);

enum class BoundaryCondition { periodic, extrapolate };

/// Per-cell averages of `components` conserved quantities, ghost layers included.
///
/// Storage is component-major: component c occupies a contiguous run of
/// grid.total() values, starting with the leftmost ghost cell.
class CellField {
 public:
  CellField(const Grid& grid, int components);

  const Grid& grid() const { return grid_; }
  int components() const { return components_; }

  double& at(int component, int j) { return values_[offset(component, j)]; }
  const double& at(int component, int j) const { return values_[offset(component, j)]; }

  /// All cells of one component including ghosts.
  std::span<double> component(int c);
  std::span<const double> component(int c) const;
  /// Interior cells of one component.
  std::span<double> interior(int c);
  std::span<const double> interior(int c) const;

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }

  bool all_finite() const;

 private:
  std::size_t offset(int c, int j) const {
    return static_cast<std::size_t>(c) * grid_.total() + static_cast<std::size_t>(j + grid_.ghost());
  }

  Grid grid_;
  int components_;
  std::vector<double> values_;
};

using ScalarFunction = std::function<double(double)>;
/// Writes the state at x into `out` (one entry per component).
using StateFunction = std::function<void(double, std::span<double>)>;

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int points);

/// Default node count for an order-(2r-1) scheme.
inline int default_quadrature_points(int r) { return r + 1 > 5 ? r + 1 : 5; }

CellField init_averages(const Grid& grid, const ScalarFunction& f, int quad_points);
CellField init_averages(const Grid& grid, int components, const StateFunction& f, int quad_points);

void fill_ghosts(CellField& field, BoundaryCondition bc);

}  // namespace wenolab
