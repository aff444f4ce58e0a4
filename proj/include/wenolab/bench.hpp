#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wenolab/config.hpp"
#include "wenolab/mesh.hpp"
#include "wenolab/problems.hpp"
#include "wenolab/solver.hpp"
#include "wenolab/spectral.hpp"

namespace wenolab {

class MissingReference : public std::runtime_error {
 public:
  explicit MissingReference(const std::string& what) : std::runtime_error(what) {}
};

/// Cell count used when a config gives none.
int resolved_cells(const RunConfig& cfg);
SolverConfig solver_config(const RunConfig& cfg, const ProblemSpec& spec);

/// Solves cfg.problem on the first (or default) cell count.
SolveResult run_problem(const RunConfig& cfg);
SolveResult run_problem(const RunConfig& cfg, int cells);

/// h * sum_j |a_j - b_j|, summed over components.
double l1_error(const CellField& a, const CellField& b);
/// Averages groups of fine cells onto `coarse_cells` cells (interior only, no ghosts).
CellField restrict_to(const CellField& fine, int coarse_cells);

struct ConvergenceRow {
  int M = 0;
  double error = 0.0;
  /// log2(err_{M/2} / err_M); NaN for the first row or when the previous row is not M/2.
  double rate = 0.0;
};

/// Fine-grid reference of swe-smooth19: cwenoz order 5 on 8192 cells.
inline constexpr int kSweReferenceCells = 8192;
std::string swe_reference_path(const std::string& dir);
/// Loads the cached reference, or computes and stores it when `regenerate` is set.
/// Throws MissingReference if absent and not regenerating.
CellField swe_reference(const std::string& dir, bool regenerate);

/// Errors against the exact solution (advection) or the cached fine-grid reference (swe-smooth19).
std::vector<ConvergenceRow> convergence(const RunConfig& cfg);

/// Spectral signature of the configured scheme's upwind derivative.
SpectralSignature spectra(const RunConfig& cfg);
DerivativeOperator derivative_operator(const RunConfig& cfg);

struct WeightTrace {
  std::vector<double> x;
  std::vector<double> relerr;
};
/// (omega_0 - d_0) / d_0 per cell for cweno/cwenoz, (omega_1 - d_1) / d_1 at the right boundary for weno,
/// on the initial averages of a scalar problem.
WeightTrace weights_trace(const RunConfig& cfg);
WeightTrace weights_trace(const ReconScheme& scheme, const CellField& field, BoundaryCondition bc);

struct DftRows {
  std::vector<double> k, re_num, im_num, re_exact, im_exact;
};
/// c_k = (1/M) sum_j u_j exp(-2 pi i k j / M) for k = 0..M/2.
void dft_half(std::span<const double> u, std::vector<double>& re, std::vector<double>& im);
/// Half-spectrum DFT of the final numerical and exact cell averages of a scalar periodic problem.
DftRows dft(const RunConfig& cfg);

/// CSV writers; every file starts with a `#` line echoing the configuration.
std::string write_solution_csv(const RunConfig& cfg, const SolveResult& res);
std::string write_steps_csv(const RunConfig& cfg, const SolveResult& res);
std::string write_convergence_csv(const RunConfig& cfg, const std::vector<ConvergenceRow>& rows);
std::string write_signature_csv(const RunConfig& cfg, const SpectralSignature& sig);
std::string write_error_matrix_csv(const RunConfig& cfg, const SpectralSignature& sig);
std::string write_weights_csv(const RunConfig& cfg, const WeightTrace& trace);
std::string write_dft_csv(const RunConfig& cfg, const DftRows& rows);

}  // namespace wenolab
