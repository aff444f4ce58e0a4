#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wenolab/mesh.hpp"
#include "wenolab/solver.hpp"

namespace wenolab {

struct ProblemSpec {
  std::string name;
  std::shared_ptr<const FluxModel> model;
  double x_lo = 0.0;
  double x_hi = 1.0;
  int default_cells = 200;
  BoundaryCondition bc = BoundaryCondition::periodic;
  double t_end = 1.0;
  bool characteristic = false;
  StateFunction initial;
  /// Pointwise exact solution at t_end, when known.
  std::optional<StateFunction> exact;

  int components() const { return model->components(); }
};

/// Registered keys, in registration order.
std::vector<std::string> problem_keys();
/// Throws std::invalid_argument for unknown keys.
const ProblemSpec& problem(std::string_view key);

/// Cell averages of the initial data (ghosts filled per the problem's boundary condition).
CellField initial_field(const ProblemSpec& spec, int cells, int ghost, int quad_points);
/// Cell averages of the exact solution at t_end; throws std::logic_error if it is unknown.
CellField exact_field(const ProblemSpec& spec, int cells, int ghost, int quad_points);

}  // namespace wenolab
