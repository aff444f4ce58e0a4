#include "wenolab/bench.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "csv.hpp"

namespace wenolab {

namespace {

std::string tag(const RunConfig& cfg) { return cfg.scheme + std::to_string(cfg.order); }

std::string out_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out_dir);
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

}  // namespace

int resolved_cells(const RunConfig& cfg) {
  return cfg.M.empty() ? problem(cfg.problem).default_cells : cfg.M.front();
}

SolverConfig solver_config(const RunConfig& cfg, const ProblemSpec& spec) {
  SolverConfig s;
  s.scheme = cfg.scheme_config();
  s.cfl = cfg.cfl;
  s.bc = spec.bc;
  s.characteristic = spec.characteristic;
  s.t_end = spec.t_end;
  if (cfg.tableau_file) s.tableau = load_tableau(*cfg.tableau_file);
  return s;
}

SolveResult run_problem(const RunConfig& cfg) { return run_problem(cfg, resolved_cells(cfg)); }

SolveResult run_problem(const RunConfig& cfg, int cells) {
  const ProblemSpec& spec = problem(cfg.problem);
  const SolverConfig sc = solver_config(cfg, spec);
  const int r = ReconScheme(sc.scheme).r();
  const CellField u0 = initial_field(spec, cells, r, default_quadrature_points(r));
  return advance(*spec.model, u0, sc);
}

double l1_error(const CellField& a, const CellField& b) {
  if (a.grid().cells() != b.grid().cells() || a.components() != b.components())
    throw std::invalid_argument("l1_error: shape mismatch");
  double s = 0.0;
  for (int c = 0; c < a.components(); ++c)
    for (int j = 0; j < a.grid().cells(); ++j) s += std::abs(a.at(c, j) - b.at(c, j));
  return a.grid().h() * s;
}

CellField restrict_to(const CellField& fine, int coarse_cells) {
  const Grid& g = fine.grid();
  if (coarse_cells <= 0 || g.cells() % coarse_cells != 0)
    throw std::invalid_argument("restrict_to: cell counts are not nested");
  const int ratio = g.cells() / coarse_cells;
  CellField out(Grid(g.x_lo(), g.x_hi(), coarse_cells, 0), fine.components());
  for (int c = 0; c < fine.components(); ++c)
    for (int j = 0; j < coarse_cells; ++j) {
      double s = 0.0;
      for (int i = 0; i < ratio; ++i) s += fine.at(c, j * ratio + i);
      out.at(c, j) = s / ratio;
    }
  return out;
}

std::string swe_reference_path(const std::string& dir) {
  return (std::filesystem::path(dir) / ("swe-smooth19_cwenoz5_M" + std::to_string(kSweReferenceCells) + ".csv"))
      .string();
}

CellField swe_reference(const std::string& dir, bool regenerate) {
  const ProblemSpec& spec = problem("swe-smooth19");
  const Grid grid(spec.x_lo, spec.x_hi, kSweReferenceCells, 0);
  const std::string path = swe_reference_path(dir);
  if (!regenerate) {
    std::ifstream f(path);
    if (!f) throw MissingReference("reference solution not found at " + path + " (rerun with --make-ref)");
    CellField ref(grid, 2);
    std::string line;
    int j = 0;
    while (std::getline(f, line)) {
      if (line.empty() || line[0] == '#' || line[0] == 'x') continue;
      std::istringstream ls(line);
      std::string x, h, q;
      if (!std::getline(ls, x, ',') || !std::getline(ls, h, ',') || !std::getline(ls, q, ',') ||
          j >= kSweReferenceCells)
        throw MissingReference("malformed reference file " + path);
      ref.at(0, j) = std::stod(h);
      ref.at(1, j) = std::stod(q);
      ++j;
    }
    if (j != kSweReferenceCells) throw MissingReference("truncated reference file " + path);
    return ref;
  }
  RunConfig cfg;
  cfg.problem = spec.name;
  cfg.scheme = "cwenoz";
  cfg.order = 5;
  const SolveResult res = run_problem(cfg, kSweReferenceCells);
  CellField ref(grid, 2);
  std::vector<double> x(kSweReferenceCells), h(kSweReferenceCells), q(kSweReferenceCells);
  for (int j = 0; j < kSweReferenceCells; ++j) {
    x[j] = grid.center(j);
    h[j] = ref.at(0, j) = res.field.at(0, j);
    q[j] = ref.at(1, j) = res.field.at(1, j);
  }
  std::filesystem::create_directories(dir);
  csv::write(path, "reference " + cfg.describe(), {"x", "h", "q"}, {x, h, q});
  return ref;
}

std::vector<ConvergenceRow> convergence(const RunConfig& cfg) {
  const ProblemSpec& spec = problem(cfg.problem);
  const std::vector<int> Ms = cfg.M.empty() ? std::vector<int>{spec.default_cells} : cfg.M;
  const int r = ReconScheme(cfg.scheme_config()).r();
  std::optional<CellField> ref;
  if (!spec.exact) {
    if (spec.name != "swe-smooth19")
      throw std::invalid_argument("problem '" + spec.name + "' has no reference solution for convergence");
    ref = swe_reference(cfg.ref_dir, cfg.make_ref && !std::filesystem::exists(swe_reference_path(cfg.ref_dir)));
  }
  std::vector<ConvergenceRow> rows;
  for (int M : Ms) {
    const SolveResult res = run_problem(cfg, M);
    const CellField target = ref ? restrict_to(*ref, M) : exact_field(spec, M, r, default_quadrature_points(r));
    ConvergenceRow row{M, l1_error(res.field, target), std::numeric_limits<double>::quiet_NaN()};
    if (!rows.empty() && 2 * rows.back().M == M) row.rate = std::log2(rows.back().error / row.error);
    rows.push_back(row);
  }
  return rows;
}

DerivativeOperator derivative_operator(const RunConfig& cfg) {
  if (cfg.linear()) return cfg.order == 2 ? central_difference() : linear_upwind_derivative((cfg.order + 1) / 2);
  return upwind_fv_derivative(ReconScheme(cfg.scheme_config()));
}

SpectralSignature spectra(const RunConfig& cfg) { return spectral_signature(derivative_operator(cfg), cfg.N); }

WeightTrace weights_trace(const ReconScheme& scheme, const CellField& field, BoundaryCondition bc) {
  if (field.components() != 1) throw std::invalid_argument("weights trace needs a scalar problem");
  CellField u = field;
  fill_ghosts(u, bc);
  const int r = scheme.r();
  const Grid& g = u.grid();
  WeightTrace tr;
  double d_ref = 0.0;
  if (scheme.family() == Family::weno)
    d_ref = weno_optimal_weights(r, 0.5).front();
  else
    d_ref = scheme.linear_weights().front();
  for (int j = 0; j < g.cells(); ++j) {
    const std::span<const double> window(&u.at(0, j - (r - 1)), 2 * r - 1);
    const Reconstruction rec = reconstruct(scheme, window, g.h());
    const double rel = (rec.weights.omega.front() - d_ref) / d_ref;
    tr.x.push_back(g.center(j));
    tr.relerr.push_back(rel == 0.0 ? 0.0 : rel);
  }
  return tr;
}

WeightTrace weights_trace(const RunConfig& cfg) {
  const ProblemSpec& spec = problem(cfg.problem);
  if (spec.components() != 1) throw std::invalid_argument("weights trace needs a scalar problem");
  const ReconScheme scheme(cfg.scheme_config());
  const int r = scheme.r();
  const CellField u0 = initial_field(spec, resolved_cells(cfg), r, default_quadrature_points(r));
  return weights_trace(scheme, u0, spec.bc);
}

void dft_half(std::span<const double> u, std::vector<double>& re, std::vector<double>& im) {
  const std::size_t M = u.size();
  re.assign(M / 2 + 1, 0.0);
  im.assign(M / 2 + 1, 0.0);
  for (std::size_t k = 0; k <= M / 2; ++k) {
    double sr = 0.0, si = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      // exact reduction of k*j mod M keeps the phase accurate for large M
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * j) % M) / static_cast<double>(M);
      sr += u[j] * std::cos(angle);
      si -= u[j] * std::sin(angle);
    }
    re[k] = sr / static_cast<double>(M);
    im[k] = si / static_cast<double>(M);
  }
}

DftRows dft(const RunConfig& cfg) {
  const ProblemSpec& spec = problem(cfg.problem);
  if (spec.components() != 1 || spec.bc != BoundaryCondition::periodic || !spec.exact)
    throw std::invalid_argument("dft needs a scalar periodic problem with an exact solution");
  const int M = resolved_cells(cfg);
  const SolveResult res = run_problem(cfg, M);
  const int r = ReconScheme(cfg.scheme_config()).r();
  const CellField ex = exact_field(spec, M, r, default_quadrature_points(r));
  DftRows rows;
  dft_half(res.field.interior(0), rows.re_num, rows.im_num);
  dft_half(ex.interior(0), rows.re_exact, rows.im_exact);
  for (std::size_t k = 0; k < rows.re_num.size(); ++k) rows.k.push_back(static_cast<double>(k));
  return rows;
}

std::string write_solution_csv(const RunConfig& cfg, const SolveResult& res) {
  const CellField& u = res.field;
  const Grid& g = u.grid();
  std::vector<std::vector<double>> cols(1 + u.components());
  std::vector<std::string> header{"x"};
  for (int j = 0; j < g.cells(); ++j) cols[0].push_back(g.center(j));
  for (int c = 0; c < u.components(); ++c) {
    header.push_back("comp" + std::to_string(c));
    const auto in = u.interior(c);
    cols[1 + c].assign(in.begin(), in.end());
  }
  const std::string path =
      out_path(cfg, "solution_" + cfg.problem + "_" + tag(cfg) + "_M" + std::to_string(g.cells()) + ".csv");
  csv::write(path, cfg.describe(), header, cols);
  return path;
}

std::string write_steps_csv(const RunConfig& cfg, const SolveResult& res) {
  std::vector<double> t, dt, s;
  for (const auto& rec : res.log) {
    t.push_back(rec.t);
    dt.push_back(rec.dt);
    s.push_back(rec.max_speed);
  }
  const std::string path = out_path(
      cfg, "steps_" + cfg.problem + "_" + tag(cfg) + "_M" + std::to_string(res.field.grid().cells()) + ".csv");
  csv::write(path, cfg.describe(), {"t", "dt", "max_speed"}, {t, dt, s});
  return path;
}

std::string write_convergence_csv(const RunConfig& cfg, const std::vector<ConvergenceRow>& rows) {
  std::vector<double> M, e, rate;
  for (const auto& row : rows) {
    M.push_back(row.M);
    e.push_back(row.error);
    rate.push_back(row.rate);
  }
  const std::string path = out_path(cfg, "convergence_" + cfg.problem + "_" + tag(cfg) + ".csv");
  csv::write(path, cfg.describe(), {"M", "error", "rate"}, {M, e, rate});
  return path;
}

std::string write_signature_csv(const RunConfig& cfg, const SpectralSignature& sig) {
  const int N = sig.complex.N;
  std::vector<double> k(N);
  for (int i = 0; i < N; ++i) k[i] = i + 1;
  const std::string path = out_path(cfg, "signature_" + tag(cfg) + "_N" + std::to_string(N) + ".csv");
  csv::write(path, cfg.describe(), {"k", "abscissa", "diffusion", "dispersion", "delta", "T_k", "Tj"},
             {k, sig.complex.abscissa, sig.complex.diffusion, sig.complex.dispersion, sig.delta, sig.temp.mode,
              sig.temp.running});
  return path;
}

std::string write_error_matrix_csv(const RunConfig& cfg, const SpectralSignature& sig) {
  const int n = 2 * sig.omega.N;
  const std::vector<double> E = error_matrix(sig.omega);
  std::vector<std::vector<double>> cols(n, std::vector<double>(n));
  std::vector<std::string> header;
  for (int c = 0; c < n; ++c) {
    header.push_back("c" + std::to_string(c + 1));
    for (int r = 0; r < n; ++r) cols[c][r] = E[static_cast<std::size_t>(r) * n + c];
  }
  const std::string path = out_path(cfg, "error_matrix_" + tag(cfg) + "_N" + std::to_string(sig.omega.N) + ".csv");
  csv::write(path, cfg.describe(), header, cols);
  return path;
}

std::string write_weights_csv(const RunConfig& cfg, const WeightTrace& trace) {
  const std::string path = out_path(cfg, "weights_" + cfg.problem + "_" + tag(cfg) + "_M" +
                                             std::to_string(resolved_cells(cfg)) + ".csv");
  csv::write(path, cfg.describe(), {"x", "relerr"}, {trace.x, trace.relerr});
  return path;
}

std::string write_dft_csv(const RunConfig& cfg, const DftRows& rows) {
  const std::string path =
      out_path(cfg, "dft_" + cfg.problem + "_" + tag(cfg) + "_M" + std::to_string(resolved_cells(cfg)) + ".csv");
  csv::write(path, cfg.describe(), {"k", "re_num", "im_num", "re_exact", "im_exact"},
             {rows.k, rows.re_num, rows.im_num, rows.re_exact, rows.im_exact});
  return path;
}

}  // namespace wenolab
