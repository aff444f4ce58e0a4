// wenolab: run problems, convergence studies, spectral signatures and weight diagnostics.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wenolab/bench.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitBlowUp = 2;
constexpr int kExitMissingReference = 3;

struct Flags {
  std::string config_file;
  std::string problem, scheme, M, eps_rule, tau, out, tableau, ref_dir;
  int order = 0, N = 0;
  double t = 0, d0 = 0, cfl = 0;
  bool make_ref = false, dump_E = false;
};

void add_shared(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_file, "key = value configuration file (flags override it)");
  cmd->add_option("--problem", f.problem, "problem key");
  cmd->add_option("--scheme", f.scheme, "reconstruction family")
      ->check(CLI::IsMember({"weno", "cweno", "cwenoz", "linear-central"}));
  cmd->add_option("--order", f.order, "order of accuracy");
  cmd->add_option("--M", f.M, "cell count, or comma separated list for convergence");
  cmd->add_option("--N", f.N, "number of Fourier modes");
  cmd->add_option("--eps-rule", f.eps_rule, "epsilon rule c*h^p");
  cmd->add_option("--t", f.t, "weight exponent");
  cmd->add_option("--d0", f.d0, "linear weight of the central polynomial");
  cmd->add_option("--tau", f.tau, "global indicator variant")->check(CLI::IsMember({"standard", "optimal"}));
  cmd->add_option("--cfl", f.cfl, "Courant number");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--tableau", f.tableau, "Runge-Kutta tableau file");
  cmd->add_option("--ref-dir", f.ref_dir, "reference solution cache directory");
}

wenolab::RunConfig resolve(const CLI::App* cmd, const Flags& f) {
  wenolab::RunConfig cfg;
  if (!f.config_file.empty()) cfg = wenolab::load_config_file(f.config_file);
  auto set = [&](const char* flag, const char* key, const std::string& value) {
    if (cmd->count(flag) > 0) wenolab::apply_setting(cfg, key, value);
  };
  set("--problem", "problem", f.problem);
  set("--scheme", "scheme", f.scheme);
  set("--order", "order", std::to_string(f.order));
  set("--M", "M", f.M);
  set("--N", "N", std::to_string(f.N));
  set("--eps-rule", "eps-rule", f.eps_rule);
  if (cmd->count("--t") > 0) cfg.t = f.t;
  if (cmd->count("--d0") > 0) cfg.d0 = f.d0;
  if (cmd->count("--cfl") > 0) cfg.cfl = f.cfl;
  set("--tau", "tau", f.tau);
  set("--out", "out", f.out);
  set("--tableau", "tableau", f.tableau);
  set("--ref-dir", "ref-dir", f.ref_dir);
  if (f.make_ref) cfg.make_ref = true;
  if (f.dump_E) cfg.dump_error_matrix = true;
  cfg.validate();
  return cfg;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume WENO/CWENO/CWENOZ laboratory"};
  app.require_subcommand(1);
  Flags f;
  auto* solve = app.add_subcommand("solve", "run a problem to its final time");
  auto* conv = app.add_subcommand("convergence", "error and rate table over a list of cell counts");
  auto* spec = app.add_subcommand("spectra", "spectral signature of the upwind derivative");
  auto* trace = app.add_subcommand("weights-trace", "relative nonlinear weight errors on the initial data");
  auto* dft = app.add_subcommand("dft", "half-spectrum DFT of the final and exact solutions");
  for (auto* cmd : {solve, conv, spec, trace, dft}) add_shared(cmd, f);
  conv->add_flag("--make-ref", f.make_ref, "compute the fine-grid reference if it is missing");
  spec->add_flag("--dump-E", f.dump_E, "also write the relative error matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  wenolab::RunConfig cfg;
  try {
    cfg = resolve(cmd, f);
    if (cmd != spec && cfg.linear()) throw std::invalid_argument("linear-central is only available for spectra");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (cmd == solve) {
      const auto res = wenolab::run_problem(cfg);
      std::cout << wenolab::write_solution_csv(cfg, res) << '\n' << wenolab::write_steps_csv(cfg, res) << '\n';
    } else if (cmd == conv) {
      const auto rows = wenolab::convergence(cfg);
      for (const auto& row : rows)
        std::cout << row.M << ' ' << fmt(row.error) << ' ' << (std::isnan(row.rate) ? "-" : fmt(row.rate)) << '\n';
      std::cout << wenolab::write_convergence_csv(cfg, rows) << '\n';
    } else if (cmd == spec) {
      const auto sig = wenolab::spectra(cfg);
      wenolab::write_signature_csv(cfg, sig);
      if (cfg.dump_error_matrix) wenolab::write_error_matrix_csv(cfg, sig);
      std::cout << cfg.scheme << ',' << cfg.order << ',' << cfg.N << ',' << fmt(sig.temp.scheme) << '\n';
    } else if (cmd == trace) {
      std::cout << wenolab::write_weights_csv(cfg, wenolab::weights_trace(cfg)) << '\n';
    } else if (cmd == dft) {
      std::cout << wenolab::write_dft_csv(cfg, wenolab::dft(cfg)) << '\n';
    }
  } catch (const wenolab::BlowUp& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBlowUp;
  } catch (const wenolab::MissingReference& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMissingReference;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
