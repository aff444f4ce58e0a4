#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "wenolab/mesh.hpp"

using namespace wenolab;

TEST_CASE("grid geometry") {
  const Grid g(-1.0, 1.0, 40, 3);
  CHECK(g.h() == doctest::Approx(0.05));
  CHECK(g.total() == 46);
  CHECK(g.cell_lo(0) == -1.0);
  CHECK(g.cell_hi(39) == doctest::Approx(1.0));
  CHECK(g.center(-1) == doctest::Approx(-1.025));
}

TEST_CASE("grid rejects bad extents") {
  CHECK_THROWS_AS(Grid(1.0, 1.0, 10, 2), InvalidExtent);
  CHECK_THROWS_AS(Grid(0.0, 1.0, 10, -1), InvalidExtent);
  // fewer cells than one full stencil of 2g+1
  CHECK_THROWS_AS(Grid(0.0, 1.0, 4, 2), InvalidExtent);
  CHECK_NOTHROW(Grid(0.0, 1.0, 5, 2));
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1") {
  for (int n = 1; n <= 10; ++n) {
    const GaussRule q = gauss_legendre(n);
    REQUIRE(q.nodes.size() == static_cast<std::size_t>(n));
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += q.weights[i] * std::pow(q.nodes[i], p);
      const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-14));
    }
  }
}

TEST_CASE("cell averages of a linear function are the centre values") {
  const Grid g(0.0, 2.0, 16, 2);
  const CellField f = init_averages(g, [](double x) { return 3.0 * x - 1.0; }, 5);
  for (int j = 0; j < 16; ++j) CHECK(f.at(0, j) == doctest::Approx(3.0 * g.center(j) - 1.0).epsilon(1e-14));
}

TEST_CASE("cell averages of sin match the closed form") {
  const Grid g(0.0, 1.0, 33, 2);
  const double k = 2.0 * std::numbers::pi * 3.0;
  const CellField f = init_averages(g, [k](double x) { return std::sin(k * x); }, 6);
  for (int j = 0; j < 33; ++j) {
    const double exact = (std::cos(k * g.cell_lo(j)) - std::cos(k * g.cell_hi(j))) / (k * g.h());
    CHECK(std::abs(f.at(0, j) - exact) < 1e-13);
  }
}

TEST_CASE("periodic and extrapolating ghosts") {
  const Grid g(0.0, 1.0, 8, 3);
  CellField f(g, 2);
  for (int c = 0; c < 2; ++c)
    for (int j = 0; j < 8; ++j) f.at(c, j) = 10 * c + j;
  fill_ghosts(f, BoundaryCondition::periodic);
  for (int c = 0; c < 2; ++c) {
    CHECK(f.at(c, -1) == 10 * c + 7);
    CHECK(f.at(c, -3) == 10 * c + 5);
    CHECK(f.at(c, 8) == 10 * c + 0);
    CHECK(f.at(c, 10) == 10 * c + 2);
  }
  fill_ghosts(f, BoundaryCondition::extrapolate);
  CHECK(f.at(1, -3) == 10);
  CHECK(f.at(1, 10) == 17);
  CHECK(f.all_finite());
  f.at(0, 3) = std::nan("");
  CHECK_FALSE(f.all_finite());
}

TEST_CASE("vector-valued initial data") {
  const Grid g(0.0, 1.0, 10, 1);
  const CellField f = init_averages(g, 2, [](double x, std::span<double> u) {
    u[0] = 1.0;
    u[1] = x;
  }, 3);
  CHECK(f.components() == 2);
  CHECK(f.at(0, 4) == doctest::Approx(1.0));
  CHECK(f.at(1, 4) == doctest::Approx(0.45));
  CHECK(f.interior(1).size() == 10);
  CHECK(f.component(1).size() == 12);
}
