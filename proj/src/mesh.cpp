#include "wenolab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace wenolab {

Grid::Grid(double x_lo, double x_hi, int cells, int ghost)
    : x_lo_(x_lo), x_hi_(x_hi), cells_(cells), ghost_(ghost), h_(0.0) {
  if (!(x_hi > x_lo)) throw InvalidExtent("grid: x_hi must exceed x_lo");
  if (ghost < 0) throw InvalidExtent("grid: negative ghost width");
  if (cells < 1 || cells < 2 * ghost + 1)
    throw InvalidExtent("grid: need at least 2*ghost+1 cells, got " + std::to_string(cells));
  h_ = (x_hi - x_lo) / cells;
}

Grid make_grid(double x_lo, double x_hi, int cells, int ghost) { return Grid(x_lo, x_hi, cells, ghost); }

CellField::CellField(const Grid& grid, int components)
    : grid_(grid), components_(components),
      values_(static_cast<std::size_t>(grid.total()) * components, 0.0) {
  if (components < 1) throw std::invalid_argument("field: at least one component required");
}

std::span<double> CellField::component(int c) {
  return std::span<double>(values_).subspan(static_cast<std::size_t>(c) * grid_.total(), grid_.total());
}

std::span<const double> CellField::component(int c) const {
  return std::span<const double>(values_).subspan(static_cast<std::size_t>(c) * grid_.total(),
                                                  grid_.total());
}

std::span<double> CellField::interior(int c) { return component(c).subspan(grid_.ghost(), grid_.cells()); }

std::span<const double> CellField::interior(int c) const {
  return component(c).subspan(grid_.ghost(), grid_.cells());
}

bool CellField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

namespace {

// Legendre P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

}  // namespace

GaussRule gauss_legendre(int points) {
  if (points < 1) throw std::invalid_argument("gauss_legendre: points must be positive");
  const int n = points;
  GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  for (int i = 0; i < n / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, pm] = legendre_pair(n, x);
      const double dp = n * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [pn, pm] = legendre_pair(n, x);
    const double dp = n * (x * pn - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    const auto [pn, pm] = legendre_pair(n, 0.0);
    const double dp = n * (0.0 * pn - pm) / -1.0;
    rule.nodes[n / 2] = 0.0;
    rule.weights[n / 2] = 2.0 / (dp * dp);
  }
  return rule;
}

CellField init_averages(const Grid& grid, const ScalarFunction& f, int quad_points) {
  return init_averages(
      grid, 1, [&f](double x, std::span<double> out) { out[0] = f(x); }, quad_points);
}

CellField init_averages(const Grid& grid, int components, const StateFunction& f, int quad_points) {
  CellField field(grid, components);
  const GaussRule rule = gauss_legendre(quad_points);
  std::vector<double> state(components);
  std::vector<double> acc(components);
  const double half = 0.5 * grid.h();
  for (int j = 0; j < grid.cells(); ++j) {
    const double xc = grid.center(j);
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int q = 0; q < quad_points; ++q) {
      f(xc + half * rule.nodes[q], state);
      for (int c = 0; c < components; ++c) acc[c] += rule.weights[q] * state[c];
    }
    for (int c = 0; c < components; ++c) field.at(c, j) = 0.5 * acc[c];
  }
  return field;
}

void fill_ghosts(CellField& field, BoundaryCondition bc) {
  const Grid& g = field.grid();
  const int m = g.cells();
  for (int c = 0; c < field.components(); ++c) {
    for (int s = 1; s <= g.ghost(); ++s) {
      switch (bc) {
        case BoundaryCondition::periodic:
          field.at(c, -s) = field.at(c, ((-s) % m + m) % m);
          field.at(c, m - 1 + s) = field.at(c, (m - 1 + s) % m);
          break;
        case BoundaryCondition::extrapolate:
          field.at(c, -s) = field.at(c, 0);
          field.at(c, m - 1 + s) = field.at(c, m - 1);
          break;
      }
    }
  }
}

}  // namespace wenolab
