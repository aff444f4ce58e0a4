#include "wenolab/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernel_plan.hpp"
#include "stencil_tables.hpp"

namespace wenolab {

namespace {

bool cpu_has_avx2() {
#if defined(WENOLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("WENOLAB_ISA")) {
    const std::string want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && cpu_has_avx2()) return Isa::avx2;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

Isa& isa_slot() {
  static Isa isa = initial_isa();
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() { return isa_slot(); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument("instruction set not available: " + std::string(to_string(isa)));
  isa_slot() = isa;
}

ReconKernel::ReconKernel(const ReconScheme& scheme, std::vector<double> nodes)
    : scheme_(scheme), nodes_(std::move(nodes)), plan_(std::make_unique<detail::KernelPlan>()) {
  const int r = scheme.r();
  if (nodes_.empty() || static_cast<int>(nodes_.size()) > detail::kMaxNodes)
    throw std::invalid_argument("ReconKernel: between 1 and " + std::to_string(detail::kMaxNodes) + " nodes");
  const auto& tables = detail::stencil_tables(r);
  auto& p = *plan_;
  p.family = scheme.family();
  p.r = r;
  p.nodes = static_cast<int>(nodes_.size());
  p.t = scheme.t();
  const int ti = static_cast<int>(p.t);
  p.t_int = (ti == p.t && ti >= 1 && ti <= 16) ? ti : 0;

  for (int n = 0; n < p.nodes; ++n) {
    const double xi = nodes_[n];
    if (!(xi >= -0.5 && xi <= 0.5)) throw std::invalid_argument("ReconKernel: node outside the cell");
    p.xi[n] = xi;
    if (p.family == Family::weno) {
      if (xi != 0.5 && xi != -0.5)
        throw NoPositiveWeights("WENO reconstruction is restricted to cell boundaries");
      const auto d = weno_optimal_weights(r, xi);
      for (int k = 0; k < r; ++k) p.weno_d[n][k] = d[k];
    }
  }

  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l)
      for (int m = 0; m < r; ++m) p.sub[k][l][m] = tables.sub[k][l * r + m];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) p.cf_sub[i][j] = tables.folded_sub[i * r + j];

  if (p.family != Family::weno) {
    const auto d = scheme.linear_weights();
    for (int k = 0; k <= r; ++k) p.d[k] = d[k];
    const int w = 2 * r - 1;
    // P_0 = (P_opt - sum_k d_k P_k) / d_0 folded into one window-to-coefficient table.
    for (int l = 0; l < w; ++l) {
      for (int m = 0; m < w; ++m) {
        double v = tables.opt[l * w + m];
        if (l < r)
          for (int k = 1; k <= r; ++k) {
            const int local = m - (k - 1);
            if (local >= 0 && local < r) v -= d[k] * tables.sub[k - 1][l * r + local];
          }
        p.central[l][m] = v / d[0];
      }
    }
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < w; ++j) p.cf_central[i][j] = tables.folded_opt[i * w + j];
    if (p.family == Family::cwenoz) {
      const auto c = tau_coefficients(r, scheme.tau_variant());
      for (int k = 0; k < r; ++k) p.tau_c[k] = c[k];
    }
  }
}

ReconKernel::~ReconKernel() = default;
ReconKernel::ReconKernel(ReconKernel&&) noexcept = default;
ReconKernel& ReconKernel::operator=(ReconKernel&&) noexcept = default;

void ReconKernel::run(WindowView in, double h, std::span<double> out, Isa isa) const {
  if (out.size() < in.cells * nodes_.size()) throw std::invalid_argument("ReconKernel::run: output too small");
  if (in.cells == 0) return;
  const double eps = scheme_.epsilon(h);
  if (isa == Isa::avx2) {
#ifdef WENOLAB_HAVE_AVX2
    if (!isa_available(Isa::avx2)) throw std::invalid_argument("AVX2 kernel requested on a CPU without AVX2");
    detail::run_avx2(*plan_, in, eps, out.data());
    return;
#else
    throw std::invalid_argument("AVX2 kernel not compiled in");
#endif
  }
  detail::run_scalar(*plan_, in, eps, out.data(), 0, in.cells);
}

}  // namespace wenolab
