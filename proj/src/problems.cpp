#include "wenolab/problems.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "wenolab/physics.hpp"

namespace wenolab {

namespace {

using std::numbers::pi;

// Periodic transport on [-1, 1] at unit speed: exact solution is the shifted initial profile.
ProblemSpec advection(std::string name, double (*f)(double), double t_end, int cells) {
  ProblemSpec p;
  p.name = std::move(name);
  p.model = std::make_shared<AdvectionModel>(1.0);
  p.x_lo = -1.0;
  p.x_hi = 1.0;
  p.default_cells = cells;
  p.bc = BoundaryCondition::periodic;
  p.t_end = t_end;
  p.initial = [f](double x, std::span<double> u) { u[0] = f(x); };
  p.exact = [f, t_end](double x, std::span<double> u) {
    double y = std::fmod(x - t_end + 1.0, 2.0);
    if (y < 0.0) y += 2.0;
    u[0] = f(y - 1.0);
  };
  return p;
}

ProblemSpec euler(std::string name, double t_end, int cells, StateFunction init) {
  ProblemSpec p;
  p.name = std::move(name);
  p.model = std::make_shared<EulerModel>(1.4);
  p.x_lo = -5.0;
  p.x_hi = 5.0;
  p.default_cells = cells;
  p.bc = BoundaryCondition::extrapolate;
  p.t_end = t_end;
  p.characteristic = true;
  p.initial = std::move(init);
  return p;
}

std::map<std::string, ProblemSpec, std::less<>> build_registry() {
  std::map<std::string, ProblemSpec, std::less<>> reg;
  auto add = [&](ProblemSpec p) { reg.emplace(p.name, std::move(p)); };

  // one period of the domain
  add(advection("advection-smooth17", smooth_wave, 2.0, 320));
  add(advection("advection-jiangshu", jiangshu_composite, 8.0, 400));
  add(advection("advection-ellipse18", ellipse_bump, 8.0, 200));

  const EulerModel gas(1.4);
  add(euler("euler-lax", 1.3, 200, [gas](double x, std::span<double> u) {
    if (x < 0.0)
      gas.conserved(0.445, 0.6989, 3.5277, u);
    else
      gas.conserved(0.5, 0.0, 0.571, u);
  }));
  add(euler("euler-shuosher", 1.8, 400, [gas](double x, std::span<double> u) {
    if (x < -4.0)
      gas.conserved(3.857143, 2.629369, 10.333333, u);
    else
      gas.conserved(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0, u);
  }));

  ProblemSpec swe;
  swe.name = "swe-smooth19";
  swe.model = std::make_shared<ShallowWaterModel>([](double x) { return std::sin(pi * x) * std::sin(pi * x); },
                                                  [](double x) { return pi * std::sin(2.0 * pi * x); }, 9.81);
  swe.x_lo = 0.0;
  swe.x_hi = 1.0;
  swe.default_cells = 128;
  swe.bc = BoundaryCondition::periodic;
  swe.t_end = 0.1;
  swe.initial = [](double x, std::span<double> u) {
    u[0] = 5.0 + std::exp(std::cos(2.0 * pi * x));
    u[1] = std::sin(std::cos(2.0 * pi * x));
  };
  add(std::move(swe));
  return reg;
}

const std::map<std::string, ProblemSpec, std::less<>>& registry() {
  static const auto reg = build_registry();
  return reg;
}

}  // namespace

std::vector<std::string> problem_keys() {
  return {"advection-smooth17", "advection-jiangshu", "advection-ellipse18",
          "euler-lax",          "euler-shuosher",     "swe-smooth19"};
}

const ProblemSpec& problem(std::string_view key) {
  const auto& reg = registry();
  const auto it = reg.find(key);
  if (it == reg.end()) throw std::invalid_argument("unknown problem '" + std::string(key) + "'");
  return it->second;
}

CellField initial_field(const ProblemSpec& spec, int cells, int ghost, int quad_points) {
  const Grid grid(spec.x_lo, spec.x_hi, cells, ghost);
  CellField f = init_averages(grid, spec.components(), spec.initial, quad_points);
  fill_ghosts(f, spec.bc);
  return f;
}

CellField exact_field(const ProblemSpec& spec, int cells, int ghost, int quad_points) {
  if (!spec.exact) throw std::logic_error("problem '" + spec.name + "' has no exact solution");
  const Grid grid(spec.x_lo, spec.x_hi, cells, ghost);
  CellField f = init_averages(grid, spec.components(), *spec.exact, quad_points);
  fill_ghosts(f, spec.bc);
  return f;
}

}  // namespace wenolab
