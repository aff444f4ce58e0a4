#include "wenolab/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "wenolab/problems.hpp"

namespace wenolab {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view s, std::string_view what) {
  s = trim(s);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad number for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

int to_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

bool to_bool(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("bad boolean for " + std::string(what) + ": '" + std::string(s) + "'");
}

}  // namespace

EpsilonRule parse_eps_rule(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw std::invalid_argument("empty eps rule");
  EpsilonRule rule{1.0, 0.0};
  const auto hpos = s.find('h');
  if (hpos == std::string::npos) {
    rule.coeff = to_double(s, "eps rule");
  } else {
    std::string_view head(s.data(), hpos);
    std::string_view tail(s.data() + hpos + 1, s.size() - hpos - 1);
    if (!head.empty()) {
      if (head.back() != '*') throw std::invalid_argument("eps rule must look like c*h^p: '" + s + "'");
      rule.coeff = to_double(head.substr(0, head.size() - 1), "eps rule");
    }
    rule.power = 1.0;
    if (!tail.empty()) {
      if (tail.front() != '^') throw std::invalid_argument("eps rule must look like c*h^p: '" + s + "'");
      rule.power = to_double(tail.substr(1), "eps rule");
    }
  }
  if (!(rule.coeff > 0.0)) throw std::invalid_argument("eps rule coefficient must be positive");
  return rule;
}

std::string format_eps_rule(const EpsilonRule& rule) {
  return csv::number(rule.coeff) + "*h^" + csv::number(rule.power);
}

Family parse_family(std::string_view name) {
  if (name == "weno") return Family::weno;
  if (name == "cweno") return Family::cweno;
  if (name == "cwenoz") return Family::cwenoz;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

TauVariant parse_tau(std::string_view name) {
  if (name == "standard") return TauVariant::standard;
  if (name == "optimal") return TauVariant::optimal;
  throw std::invalid_argument("unknown tau variant '" + std::string(name) + "'");
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    out.push_back(to_int(item, "cell count"));
    if (out.back() <= 0) throw std::invalid_argument("cell counts must be positive");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty cell count list");
  return out;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "problem") cfg.problem = value;
  else if (key == "scheme") cfg.scheme = value;
  else if (key == "order") cfg.order = to_int(value, key);
  else if (key == "M") cfg.M = parse_int_list(value);
  else if (key == "N") cfg.N = to_int(value, key);
  else if (key == "eps-rule") cfg.eps = parse_eps_rule(value);
  else if (key == "t") cfg.t = to_double(value, key);
  else if (key == "d0") cfg.d0 = to_double(value, key);
  else if (key == "tau") cfg.tau = parse_tau(value);
  else if (key == "cfl") cfg.cfl = to_double(value, key);
  else if (key == "out") cfg.out_dir = value;
  else if (key == "tableau") cfg.tableau_file = std::string(value);
  else if (key == "ref-dir") cfg.ref_dir = value;
  else if (key == "make-ref") cfg.make_ref = to_bool(value, key);
  else if (key == "dump-E") cfg.dump_error_matrix = to_bool(value, key);
  else throw std::invalid_argument("unknown configuration key '" + std::string(key) + "'");
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  int lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str(), std::move(base));
}

void RunConfig::validate() const {
  (void)wenolab::problem(problem);
  if (linear()) {
    if (order != 2 && (order < 3 || order % 2 == 0 || order > 2 * kMaxR - 1))
      throw std::invalid_argument("linear-central supports order 2 or odd orders 3..11");
  } else {
    (void)ReconScheme(scheme_config());
  }
  if (N < 8) throw std::invalid_argument("N must be at least 8");
  if (!(cfl > 0.0 && cfl < 1.0)) throw std::invalid_argument("cfl must lie in (0, 1)");
  for (int m : M)
    if (m <= 0) throw std::invalid_argument("cell counts must be positive");
}

SchemeConfig RunConfig::scheme_config() const {
  if (linear()) throw std::invalid_argument("linear-central is only available for spectra");
  SchemeConfig s;
  s.family = parse_family(scheme);
  s.order = order;
  s.d0 = d0;
  s.t = t;
  s.eps = eps;
  s.tau = tau;
  return s;
}

std::string RunConfig::describe() const {
  std::string m;
  for (std::size_t i = 0; i < M.size(); ++i) m += (i ? "," : "") + std::to_string(M[i]);
  std::string s = "problem=" + problem + " scheme=" + scheme + " order=" + std::to_string(order) +
                  " M=" + (m.empty() ? "default" : m) + " N=" + std::to_string(N) +
                  " eps-rule=" + format_eps_rule(eps) + " t=" + csv::number(t) + " d0=" + csv::number(d0) +
                  " tau=" + to_string(tau) + " cfl=" + csv::number(cfl);
  if (tableau_file) s += " tableau=" + *tableau_file;
  return s;
}

}  // namespace wenolab
