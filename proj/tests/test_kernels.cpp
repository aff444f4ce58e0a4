#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "wenolab/kernels.hpp"

using namespace wenolab;

namespace {

SchemeConfig cfg(Family f, int order) {
  SchemeConfig c;
  c.family = f;
  c.order = order;
  return c;
}

// Random smooth-ish data with a few jumps, padded by r-1 cells on each side.
std::vector<double> sample_data(std::size_t cells, int r, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(cells + 2 * (r - 1));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = std::sin(0.37 * static_cast<double>(i)) + 0.05 * u(rng);
    if (i % 29 == 0) v[i] += 3.0;
  }
  return v;
}

std::vector<double> nodes_for(Family f) {
  if (f == Family::weno) return {-0.5, 0.5};
  return {-0.5, -0.2886751345948129, 0.0, 0.2886751345948129, 0.5};
}

}  // namespace

TEST_CASE("isa selection") {
  CHECK(isa_available(Isa::scalar));
  CHECK(to_string(Isa::scalar) == "scalar");
  CHECK(to_string(Isa::avx2) == "avx2");
  const Isa before = active_isa();
  set_isa(Isa::scalar);
  CHECK(active_isa() == Isa::scalar);
  if (!isa_available(Isa::avx2)) CHECK_THROWS_AS(set_isa(Isa::avx2), std::invalid_argument);
  set_isa(before);
}

TEST_CASE("kernel agrees with the reference reconstruction") {
  const std::size_t cells = 37;  // not a multiple of the vector width
  const double h = 0.03;
  for (int order = 3; order <= 11; order += 2)
    for (Family f : {Family::weno, Family::cweno, Family::cwenoz}) {
      const ReconScheme scheme(cfg(f, order));
      const int r = scheme.r();
      const auto data = sample_data(cells, r, order);
      const auto nodes = nodes_for(f);
      const ReconKernel kernel(scheme, nodes);
      std::vector<double> out(cells * nodes.size());
      kernel.run({data.data(), 1, cells}, h, out, Isa::scalar);
      for (std::size_t j = 0; j < cells; ++j) {
        const auto rec = reconstruct(scheme, std::span(data).subspan(j, 2 * r - 1), h);
        for (std::size_t n = 0; n < nodes.size(); ++n) {
          double expect = 0.0;
          if (rec.poly) expect = (*rec.poly)(nodes[n]);
          else expect = nodes[n] < 0 ? rec.left : rec.right;
          INFO("order " << order << " family " << to_string(f) << " cell " << j << " node " << n);
          CHECK(out[n * cells + j] == doctest::Approx(expect).epsilon(1e-12).scale(1.0));
        }
      }
    }
}

TEST_CASE("AVX2 and scalar kernels are bitwise identical") {
  if (!isa_available(Isa::avx2)) return;
  for (int order = 3; order <= 11; order += 2)
    for (Family f : {Family::weno, Family::cweno, Family::cwenoz})
      for (std::size_t cells : {std::size_t{1}, std::size_t{4}, std::size_t{7}, std::size_t{130}}) {
        const ReconScheme scheme(cfg(f, order));
        const auto data = sample_data(cells, scheme.r(), 100 + order);
        const auto nodes = nodes_for(f);
        const ReconKernel kernel(scheme, nodes);
        std::vector<double> a(cells * nodes.size()), b(a.size());
        kernel.run({data.data(), 1, cells}, 0.01, a, Isa::scalar);
        kernel.run({data.data(), 1, cells}, 0.01, b, Isa::avx2);
        INFO("order " << order << " family " << to_string(f) << " cells " << cells);
        CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
      }
}

TEST_CASE("packed windows") {
  // one private copy of the 2r-1 window per cell, cell stride 2r-1
  const ReconScheme scheme(cfg(Family::cwenoz, 5));
  const std::size_t cells = 20;
  const auto data = sample_data(cells, 3, 9);
  std::vector<double> packed;
  for (std::size_t j = 0; j < cells; ++j) packed.insert(packed.end(), data.begin() + j, data.begin() + j + 5);
  const ReconKernel kernel(scheme, {0.5});
  std::vector<double> a(cells), b(cells);
  kernel.run({data.data(), 1, cells}, 0.1, a);
  kernel.run({packed.data(), 5, cells}, 0.1, b);
  CHECK(a == b);
}

TEST_CASE("kernel argument checks") {
  const ReconScheme weno(cfg(Family::weno, 5));
  CHECK_THROWS_AS(ReconKernel(weno, {0.0}), NoPositiveWeights);
  CHECK_THROWS_AS(ReconKernel(weno, {}), std::invalid_argument);
  const ReconScheme cw(cfg(Family::cweno, 5));
  CHECK_THROWS_AS(ReconKernel(cw, {0.75}), std::invalid_argument);
  const ReconKernel k(cw, {0.5, -0.5});
  std::vector<double> data(12, 1.0), out(3);
  CHECK_THROWS_AS(k.run({data.data(), 1, 8}, 0.1, out), std::invalid_argument);
}
