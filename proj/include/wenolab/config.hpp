#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wenolab/recon.hpp"

namespace wenolab {

/// Resolved settings of one harness invocation.
struct RunConfig {
  std::string problem = "advection-smooth17";
  /// weno, cweno, cwenoz or linear-central (spectra only).
  std::string scheme = "cwenoz";
  int order = 5;
  /// Cell counts; empty means the problem default. Convergence uses all of them.
  std::vector<int> M;
  int N = 128;
  EpsilonRule eps{};
  double t = 2.0;
  double d0 = 0.5;
  TauVariant tau = TauVariant::optimal;
  double cfl = 0.45;
  std::string out_dir = ".";
  std::optional<std::string> tableau_file;
  /// Directory of cached reference solutions.
  std::string ref_dir = "references";
  bool make_ref = false;
  bool dump_error_matrix = false;

  /// Throws std::invalid_argument on any inconsistent field.
  void validate() const;
  bool linear() const { return scheme == "linear-central"; }
  /// Scheme settings; throws for linear-central.
  SchemeConfig scheme_config() const;
  /// Single-line `key=value` echo of every field.
  std::string describe() const;
};

/// "c*h^p", "h^p", "c*h", "h" or a bare constant "c" (p = 0).
EpsilonRule parse_eps_rule(std::string_view text);
std::string format_eps_rule(const EpsilonRule& rule);
Family parse_family(std::string_view name);
TauVariant parse_tau(std::string_view name);
/// Comma separated positive integers.
std::vector<int> parse_int_list(std::string_view text);

/// Applies `key = value` lines (# comments, blank lines allowed) on top of `base`.
RunConfig parse_config_text(std::string_view text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});
/// Sets one field by key; keys match the long CLI flag names.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

}  // namespace wenolab
