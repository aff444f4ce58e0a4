#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wenolab/kernels.hpp"
#include "wenolab/mesh.hpp"
#include "wenolab/recon.hpp"
#include "wenolab/rk.hpp"

namespace wenolab {

class InadmissibleState : public std::domain_error {
 public:
  explicit InadmissibleState(const std::string& what) : std::domain_error(what) {}
};

class BlowUp : public std::runtime_error {
 public:
  BlowUp(std::size_t step, const std::string& what)
      : std::runtime_error("blow-up at step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Reconstructed states of one cell at the dyadic nodes -1/2 + i / 2^level, i = 0..2^level.
struct SourceSamples {
  double x_lo = 0.0;
  double h = 0.0;
  int level = 0;
  int components = 0;
  std::span<const double> values;  // [node * components + c]
};

/// Flux function, wave speeds and optional eigenvectors and source of a 1D balance law.
class FluxModel {
 public:
  virtual ~FluxModel() = default;

  virtual int components() const = 0;
  virtual void flux(std::span<const double> u, std::span<double> f) const = 0;
  /// Spectral radius of the flux Jacobian.
  virtual double max_wavespeed(std::span<const double> u) const = 0;
  virtual bool admissible(std::span<const double> u) const;

  virtual bool has_eigensystem() const { return false; }
  /// Left (rows) and right (columns) eigenvectors of the Jacobian at u, m*m row-major each.
  virtual void eigensystem(std::span<const double> u, std::span<double> left, std::span<double> right) const;

  virtual bool has_source() const { return false; }
  /// Cell average of the source term from reconstructed node values.
  virtual void source_average(const SourceSamples& samples, std::span<double> out) const;
};

/// Local Lax-Friedrichs flux with the pairwise maximum wave speed.
void llf_flux(const FluxModel& model, std::span<const double> uL, std::span<const double> uR, std::span<double> F);

struct SolverConfig {
  SchemeConfig scheme{};
  double cfl = 0.45;
  BoundaryCondition bc = BoundaryCondition::periodic;
  bool characteristic = false;
  double t_end = 0.0;
  /// Defaults to tableau_for_order(scheme.order).
  std::optional<RKTableau> tableau;
  std::size_t max_steps = 10'000'000;

  void validate() const;
};

/// Dyadic level of the source quadrature nodes for a scheme order.
inline int source_level(int order) { return (order - 1) / 2; }

/// Spatial operator dU/dt = -(F_{j+1/2} - F_{j-1/2}) / h + S_j on a fixed grid.
class SemiDiscrete {
 public:
  SemiDiscrete(const FluxModel& model, const Grid& grid, const SchemeConfig& scheme, BoundaryCondition bc,
               bool characteristic);

  const Grid& grid() const { return grid_; }
  const ReconScheme& scheme() const { return scheme_; }

  /// Refills the ghosts of `u`, then writes the interior time derivative into `dudt`.
  void rhs(CellField& u, CellField& dudt);

  /// Interface fluxes of the last rhs() call: [c * (M + 1) + i] at x_{i-1/2}, i = 0..M.
  std::span<const double> interface_fluxes() const { return flux_; }
  /// Source averages of the last rhs() call: [c * M + j]; zero without a source.
  std::span<const double> source_averages() const { return source_; }

 private:
  void reconstruct_states(const CellField& u);

  const FluxModel& model_;
  Grid grid_;
  ReconScheme scheme_;
  BoundaryCondition bc_;
  bool characteristic_;
  int m_;
  int level_ = 0;
  std::unique_ptr<ReconKernel> kernel_;
  std::vector<double> window_;   // characteristic windows
  std::vector<double> eig_;      // per cell left then right matrices
  std::vector<double> recon_;    // [c][node][cell]
  std::vector<double> flux_;
  std::vector<double> source_;
};

/// One-shot evaluation of the semidiscrete operator.
CellField semidiscrete_rhs(const FluxModel& model, CellField& field, const SolverConfig& config);

struct StepRecord {
  double t = 0.0;   // time at the start of the step
  double dt = 0.0;
  double max_speed = 0.0;
};

struct SolveResult {
  CellField field;
  std::vector<StepRecord> log;
};

/// Integrates from t = 0 to config.t_end. Throws BlowUp on non-finite or inadmissible states.
SolveResult advance(const FluxModel& model, const CellField& field0, const SolverConfig& config);

}  // namespace wenolab
