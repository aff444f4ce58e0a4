#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "wenolab/physics.hpp"
#include "riemann.hpp"
#include "wenolab/problems.hpp"

using namespace wenolab;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, int m) {
  std::vector<double> c(m * m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j) c[i * m + j] += a[i * m + k] * b[k * m + j];
  return c;
}

ShallowWaterModel sine_bottom() {
  return ShallowWaterModel([](double x) { return std::pow(std::sin(kPi * x), 2); },
                           [](double x) { return kPi * std::sin(2 * kPi * x); });
}

}  // namespace

TEST_CASE("Euler eigenvectors") {
  const EulerModel euler;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> rho(0.1, 5.0), vel(-3.0, 3.0), p(0.05, 10.0);
  std::vector<double> u(3), L(9), R(9), f(3);
  for (int trial = 0; trial < 100; ++trial) {
    euler.conserved(rho(rng), vel(rng), p(rng), u);
    euler.eigensystem(u, L, R);
    const auto I = matmul(L, R, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::abs(I[i * 3 + j] - (i == j ? 1.0 : 0.0)) < 1e-12);
    // R diagonalises the Jacobian: compare against finite differences of the flux
    std::vector<double> J(9);
    for (int j = 0; j < 3; ++j) {
      auto up = u, um = u;
      const double d = 1e-6 * std::max(1.0, std::abs(u[j]));
      up[j] += d, um[j] -= d;
      std::vector<double> fp(3), fm(3);
      euler.flux(up, fp);
      euler.flux(um, fm);
      for (int i = 0; i < 3; ++i) J[i * 3 + j] = (fp[i] - fm[i]) / (2 * d);
    }
    const auto D = matmul(L, matmul(J, R, 3), 3);
    const double scale = euler.max_wavespeed(u);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(std::abs(D[i * 3 + j]) < 1e-6 * scale);
  }
  euler.conserved(1.0, 2.0, 1.0, u);
  CHECK(euler.pressure(u) == doctest::Approx(1.0));
  CHECK(euler.max_wavespeed(u) == doctest::Approx(2.0 + std::sqrt(1.4)));
  euler.flux(u, f);
  CHECK(f[0] == doctest::Approx(2.0));
  CHECK(f[1] == doctest::Approx(5.0));
  CHECK(euler.admissible(u));
  u[2] = 1.0;  // kinetic energy exceeds total energy
  CHECK_FALSE(euler.admissible(u));
}

TEST_CASE("shallow water eigenvectors and flux") {
  const auto swe = sine_bottom();
  std::vector<double> u{2.0, 1.5}, L(4), R(4), f(2);
  swe.eigensystem(u, L, R);
  const auto I = matmul(L, R, 2);
  CHECK(I[0] == doctest::Approx(1.0));
  CHECK(std::abs(I[1]) < 1e-14);
  swe.flux(u, f);
  CHECK(f[0] == 1.5);
  CHECK(f[1] == doctest::Approx(1.5 * 1.5 / 2.0 + 0.5 * 9.81 * 4.0));
  CHECK(swe.max_wavespeed(u) == doctest::Approx(0.75 + std::sqrt(9.81 * 2.0)));
  CHECK(swe.g() == 9.81);
  CHECK_FALSE(swe.admissible(std::vector<double>{-0.1, 0.0}));
  CHECK(swe.bottom(0.5) == doctest::Approx(1.0));
}

TEST_CASE("Romberg mean") {
  // one level with a midpoint is Simpson's rule
  auto quad = [](double x) { return 3.0 - 2.0 * x + 5.0 * x * x; };
  const std::vector<double> s{quad(-0.5), quad(0.0), quad(0.5)};
  CHECK(std::abs(romberg_mean(s, 1) - (3.0 + 5.0 / 12.0)) < 1e-13);
  CHECK(romberg_mean(std::vector<double>{2.0, 4.0}, 0) == 3.0);
  // order of the extrapolated rule on a smooth integrand, cell width dx
  for (int level : {1, 2}) {
    std::vector<double> errs;
    for (double dx : {0.4, 0.2, 0.1}) {
      const int n = 1 << level;
      std::vector<double> v;
      for (int i = 0; i <= n; ++i) v.push_back(std::exp(dx * (-0.5 + double(i) / n)));
      const double exact = (std::exp(dx / 2) - std::exp(-dx / 2)) / dx;
      errs.push_back(std::abs(romberg_mean(v, level) - exact));
    }
    const double slope = std::log2(errs[1] / errs[2]);
    INFO("level " << level << " slope " << slope);
    CHECK(slope >= 2 * level + 2 - 0.3);
  }
}

TEST_CASE("shallow water source average") {
  const std::vector<double> heights(5, 3.0);
  CHECK(swe_source_average(heights, 0.1, 0.05, 2, [](double) { return 0.0; }, 9.81) == 0.0);
  // source -g h z_x with constant h integrates to -g h (z(b) - z(a)) / dx
  auto zx = [](double x) { return kPi * std::sin(2 * kPi * x); };
  auto z = [](double x) { return std::pow(std::sin(kPi * x), 2); };
  std::vector<double> errs;
  for (double dx : {0.08, 0.04, 0.02}) {
    const double a = 0.13;
    const double exact = -9.81 * 3.0 * (z(a + dx) - z(a)) / dx;
    errs.push_back(std::abs(swe_source_average(heights, a, dx, 2, zx, 9.81) - exact));
  }
  CHECK(std::log2(errs[1] / errs[2]) >= 5.0);
}

TEST_CASE("initial data") {
  CHECK(smooth_wave(0.3) == doctest::Approx(std::sin(0.3 * kPi) - std::sin(4.5 * kPi) * std::exp(-1.8)));
  CHECK(jiangshu_composite(-0.9) == 0.0);
  CHECK(jiangshu_composite(0.9) == 0.0);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double x = -1.0 + 2.0 * i / 10000;
    const double v = jiangshu_composite(x);
    CHECK(std::bit_cast<std::uint64_t>(v) == std::bit_cast<std::uint64_t>(jiangshu_composite(x)));
    lo = std::min(lo, v), hi = std::max(hi, v);
  }
  CHECK(lo >= -0.05);
  CHECK(hi <= 1.05);
  CHECK(hi > 0.9);
  CHECK(ellipse_bump(0.5) == doctest::Approx((2.0 * std::sqrt(1.0 - 100.0 * 0.005 * 0.005) + 4.0) / 6.0));
  CHECK(ellipse_bump(0.0) == 0.0);
  CHECK(ellipse_bump(0.55) > 0.0);
}

TEST_CASE("problem registry") {
  const auto keys = problem_keys();
  CHECK(keys.size() == 6);
  for (const auto& k : keys) {
    const auto& p = problem(k);
    CHECK(p.name == k);
    CHECK(p.x_hi > p.x_lo);
    CHECK(p.t_end > 0.0);
    const auto u = initial_field(p, 64, 3, 5);
    CHECK(u.all_finite());
    for (int j = 0; j < 64; ++j) {
      std::vector<double> st(p.components());
      for (int c = 0; c < p.components(); ++c) st[c] = u.at(c, j);
      CHECK(p.model->admissible(st));
    }
  }
  CHECK_THROWS_AS(problem("no-such-problem"), std::invalid_argument);

  const auto& lax = problem("euler-lax");
  CHECK(lax.x_lo == -5.0);
  CHECK(lax.bc == BoundaryCondition::extrapolate);
  CHECK(lax.characteristic);
  std::vector<double> s(3);
  lax.initial(-1.0, s);
  CHECK(s[0] == doctest::Approx(0.445));
  CHECK(s[1] / s[0] == doctest::Approx(0.6989));
  lax.initial(1.0, s);
  CHECK(s[0] == doctest::Approx(0.5));
  CHECK(s[1] == 0.0);

  const auto& so = problem("euler-shuosher");
  CHECK(so.t_end == 1.8);
  so.initial(-4.5, s);
  CHECK(s[0] == doctest::Approx(3.857143));
  so.initial(0.1, s);
  CHECK(s[0] == doctest::Approx(1.0 + 0.2 * std::sin(0.5)));

  const auto& swe = problem("swe-smooth19");
  std::vector<double> w(2);
  swe.initial(0.25, w);
  CHECK(w[0] == doctest::Approx(5.0 + std::exp(std::cos(0.5 * kPi))));
  CHECK(w[1] == doctest::Approx(std::sin(std::cos(0.5 * kPi))));

  // advection exact solutions are the initial data after whole periods
  for (const char* k : {"advection-jiangshu", "advection-ellipse18"}) {
    const auto& p = problem(k);
    const auto a = initial_field(p, 50, 3, 5), b = exact_field(p, 50, 3, 5);
    for (int j = 0; j < 50; ++j) CHECK(a.at(0, j) == doctest::Approx(b.at(0, j)).epsilon(1e-12).scale(1.0));
  }
  CHECK_THROWS_AS(exact_field(lax, 50, 3, 5), std::logic_error);
}

TEST_CASE("lake at rest residual converges") {
  // h + z constant, q = 0: fluxes balance the source up to the truncation error
  const auto swe = sine_bottom();
  std::vector<double> res;
  for (int M : {32, 64}) {
    const Grid g(0.0, 1.0, M, 3);
    auto u = init_averages(g, 2, [&](double x, std::span<double> s) { s[0] = 5.0 - swe.bottom(x), s[1] = 0.0; }, 5);
    SolverConfig cfg;
    cfg.scheme.order = 5;
    cfg.t_end = 1.0;
    const auto du = semidiscrete_rhs(swe, u, cfg);
    double worst = 0.0;
    for (int c = 0; c < 2; ++c)
      for (int j = 0; j < M; ++j) worst = std::max(worst, std::abs(du.at(c, j)));
    res.push_back(worst);
  }
  CHECK(std::log2(res[0] / res[1]) >= 4.7);
}

TEST_CASE("smooth shallow water run conserves mass") {
  const auto& p = problem("swe-smooth19");
  const auto u0 = initial_field(p, 64, 3, 5);
  SolverConfig cfg;
  cfg.scheme.order = 5;
  cfg.t_end = p.t_end;
  cfg.characteristic = p.characteristic;
  const auto res = advance(*p.model, u0, cfg);
  double before = 0.0, after = 0.0;
  for (int j = 0; j < 64; ++j) before += u0.at(0, j), after += res.field.at(0, j);
  CHECK(std::abs(after - before) / 64.0 < 1e-11);
}

TEST_CASE("exact Riemann solver") {
  // Sod tube star state
  const riemann::ExactSolver sod({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1});
  CHECK(sod.star_pressure() == doctest::Approx(0.30313).epsilon(1e-5));
  CHECK(sod.star_velocity() == doctest::Approx(0.92745).epsilon(1e-5));
  CHECK(sod.sample(-5.0).rho == 1.0);
  CHECK(sod.sample(5.0).rho == 0.125);
  CHECK(sod.sample(1.5).rho == doctest::Approx(0.26557).epsilon(1e-4));  // between contact and shock
  CHECK(sod.sample(0.5).rho == doctest::Approx(0.42632).epsilon(1e-4));  // between fan tail and contact
  // fan is continuous at its head
  const double head = -std::sqrt(1.4);
  CHECK(sod.sample(head + 1e-9).rho == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS(riemann::ExactSolver({1.0, -20.0, 1.0}, {1.0, 20.0, 1.0}));
}
