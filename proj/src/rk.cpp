#include "wenolab/rk.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace wenolab {

namespace {

double parse_number(const std::string& tok) {
  std::size_t used = 0;
  const auto slash = tok.find('/');
  try {
    if (slash == std::string::npos) {
      const double v = std::stod(tok, &used);
      if (used == tok.size()) return v;
    } else {
      const std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
      std::size_t u1 = 0, u2 = 0;
      const double p = std::stod(num, &u1), q = std::stod(den, &u2);
      if (u1 == num.size() && u2 == den.size() && q != 0.0) return p / q;
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("tableau: bad number '" + tok + "'");
}

RKTableau make(std::string name, int order, std::vector<double> a, std::vector<double> b, std::vector<double> c) {
  RKTableau t{std::move(name), static_cast<int>(b.size()), order, std::move(a), std::move(b), std::move(c)};
  t.validate();
  return t;
}

}  // namespace

void RKTableau::validate() const {
  const auto s = static_cast<std::size_t>(stages);
  if (stages < 1 || a.size() != s * s || b.size() != s || c.size() != s)
    throw std::invalid_argument("tableau '" + name + "': inconsistent sizes");
  double sb = 0.0;
  for (double v : b) sb += v;
  if (std::abs(sb - 1.0) > 1e-14) throw std::invalid_argument("tableau '" + name + "': weights do not sum to 1");
  for (int i = 0; i < stages; ++i) {
    double row = 0.0;
    for (int j = 0; j < stages; ++j) {
      if (j >= i && A(i, j) != 0.0) throw std::invalid_argument("tableau '" + name + "': not explicit");
      row += A(i, j);
    }
    if (std::abs(row - c[i]) > 1e-14) throw std::invalid_argument("tableau '" + name + "': c is not the row sum of a");
  }
}

RKTableau ssprk3() {
  return make("ssprk3", 3,
              {0, 0, 0,
               1, 0, 0,
               0.25, 0.25, 0},
              {1.0 / 6, 1.0 / 6, 2.0 / 3}, {0, 1, 0.5});
}

RKTableau rk5_butcher() {
  const int s = 6;
  std::vector<double> a(s * s, 0.0);
  auto set = [&](int i, int j, double v) { a[i * s + j] = v; };
  set(1, 0, 0.25);
  set(2, 0, 0.125);
  set(2, 1, 0.125);
  set(3, 2, 0.5);
  set(4, 0, 3.0 / 16);
  set(4, 1, -3.0 / 8);
  set(4, 2, 3.0 / 8);
  set(4, 3, 9.0 / 16);
  set(5, 0, -3.0 / 7);
  set(5, 1, 8.0 / 7);
  set(5, 2, 6.0 / 7);
  set(5, 3, -12.0 / 7);
  set(5, 4, 8.0 / 7);
  return make("rk5-butcher", 5, std::move(a), {7.0 / 90, 0, 32.0 / 90, 12.0 / 90, 32.0 / 90, 7.0 / 90},
              {0, 0.25, 0.25, 0.5, 0.75, 1});
}

RKTableau tableau_for_order(int spatial_order) { return spatial_order <= 3 ? ssprk3() : rk5_butcher(); }

RKTableau parse_tableau(const std::string& text) {
  std::istringstream in(text);
  std::string line, key;
  RKTableau t;
  std::vector<double>* target = nullptr;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok == "name") {
        std::getline(ls, t.name);
        t.name.erase(0, t.name.find_first_not_of(" \t"));
        break;
      }
      if (tok == "order" || tok == "stages") {
        int v = 0;
        if (!(ls >> v)) throw std::invalid_argument("tableau: missing value after '" + tok + "'");
        (tok == "order" ? t.order : t.stages) = v;
        target = nullptr;
        continue;
      }
      if (tok == "a") { target = &t.a; continue; }
      if (tok == "b") { target = &t.b; continue; }
      if (tok == "c") { target = &t.c; continue; }
      if (!target) throw std::invalid_argument("tableau: unexpected token '" + tok + "'");
      target->push_back(parse_number(tok));
    }
  }
  if (t.name.empty()) t.name = "user";
  t.validate();
  return t;
}

RKTableau load_tableau(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open tableau file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_tableau(ss.str());
}

}  // namespace wenolab
