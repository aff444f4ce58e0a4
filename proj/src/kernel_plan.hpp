#pragma once

#include <cstddef>
#include <vector>

#include "wenolab/kernels.hpp"

namespace wenolab::detail {

inline constexpr int kMaxWindow = 2 * kMaxR - 1;
inline constexpr int kMaxNodes = 33;

/// Flattened coefficient tables consumed by the kernel body.
struct KernelPlan {
  Family family = Family::cweno;
  int r = 0;
  int nodes = 0;
  double t = 2.0;
  int t_int = 2;  // 0 when t is not a small positive integer
  double d[kMaxR + 1] = {};
  double tau_c[kMaxR] = {};
  // Coefficient l of P_k from its r averages: sub[k-1][l][m].
  double sub[kMaxR][kMaxR][kMaxR] = {};
  // Coefficient l of P_0 from the full window.
  double central[kMaxWindow][kMaxWindow] = {};
  // Folded smoothness forms (see folded_smoothness).
  double cf_sub[kMaxR][kMaxR] = {};
  double cf_central[kMaxWindow][kMaxWindow] = {};
  double xi[kMaxNodes] = {};
  // WENO linear weights per node.
  double weno_d[kMaxNodes][kMaxR] = {};
};

void run_scalar(const KernelPlan& plan, const WindowView& in, double eps, double* out, std::size_t begin,
                std::size_t end);
#ifdef WENOLAB_HAVE_AVX2
void run_avx2(const KernelPlan& plan, const WindowView& in, double eps, double* out);
#endif

}  // namespace wenolab::detail
