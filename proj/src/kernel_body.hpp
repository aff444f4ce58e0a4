#pragma once

// Reconstruction kernel body, templated on the lane type. Instantiated with
// `double` (scalar reference) and with the AVX2 wrapper; both perform the same
// IEEE operations in the same order, so results agree bit for bit.

#include <cmath>
#include <cstddef>

#include "kernel_plan.hpp"

namespace wenolab::detail {

template <class V>
struct Lanes;

template <>
struct Lanes<double> {
  static double set1(double x) { return x; }
  static double load(const double* p, std::ptrdiff_t /*stride*/) { return *p; }
  static void store(double* p, double v) { *p = v; }
  static double abs(double v) { return std::fabs(v); }
  static double pow(double v, double t) { return std::pow(v, t); }
};

template <class V>
inline V power_t(V x, const KernelPlan& p) {
  using L = Lanes<V>;
  if (p.t_int == 0) return L::pow(x, p.t);
  V acc = x;
  for (int i = 1; i < p.t_int; ++i) acc = acc * x;
  return acc;
}

// sum_{i,j} cf[i][j] a_i a_j over i, j = 1..q with i+j even.
template <class V, int Q, int Stride>
inline V quadratic_form(const double (*cf)[Stride], const V* a) {
  using L = Lanes<V>;
  V s = L::set1(0.0);
  for (int i = 1; i <= Q; ++i) {
    V row = L::set1(cf[i][i]) * a[i];
    for (int j = i + 2; j <= Q; j += 2) row = row + L::set1(2.0 * cf[i][j]) * a[j];
    s = s + row * a[i];
  }
  return s;
}

template <class V, int N>
inline V horner(const V* c, double xi) {
  using L = Lanes<V>;
  V v = c[N - 1];
  const V x = L::set1(xi);
  for (int l = N - 2; l >= 0; --l) v = v * x + c[l];
  return v;
}

/// Reconstructs one lane group. `w` points at element 0 of the first lane's
/// window; lanes are `stride` apart. Node n is written to out[n * out_stride].
template <class V, int R>
inline void reconstruct_lanes(const KernelPlan& p, const double* w, std::ptrdiff_t stride, double eps,
                              double* out, std::size_t out_stride) {
  using L = Lanes<V>;
  constexpr int W = 2 * R - 1;
  V u[W];
  for (int m = 0; m < W; ++m) u[m] = L::load(w + m, stride);

  V a[R][R];
  for (int k = 0; k < R; ++k) {
    for (int l = 0; l < R; ++l) {
      V acc = L::set1(p.sub[k][l][0]) * u[k];
      for (int m = 1; m < R; ++m) acc = acc + L::set1(p.sub[k][l][m]) * u[k + m];
      a[k][l] = acc;
    }
  }
  V ind[R + 1];
  for (int k = 0; k < R; ++k) ind[k + 1] = quadratic_form<V, R - 1, kMaxR>(p.cf_sub, a[k]);
  const V veps = L::set1(eps);

  if (p.family == Family::weno) {
    for (int n = 0; n < p.nodes; ++n) {
      V alpha[R];
      V sum = L::set1(0.0);
      for (int k = 0; k < R; ++k) {
        alpha[k] = L::set1(p.weno_d[n][k]) / power_t(ind[k + 1] + veps, p);
        sum = sum + alpha[k];
      }
      V value = L::set1(0.0);
      for (int k = 0; k < R; ++k) value = value + (alpha[k] / sum) * horner<V, R>(a[k], p.xi[n]);
      L::store(out + n * out_stride, value);
    }
    return;
  }

  V c0[W];
  for (int l = 0; l < W; ++l) {
    V acc = L::set1(p.central[l][0]) * u[0];
    for (int m = 1; m < W; ++m) acc = acc + L::set1(p.central[l][m]) * u[m];
    c0[l] = acc;
  }
  ind[0] = quadratic_form<V, W - 1, kMaxWindow>(p.cf_central, c0);

  V alpha[R + 1];
  V sum = L::set1(0.0);
  if (p.family == Family::cweno) {
    for (int k = 0; k <= R; ++k) {
      alpha[k] = L::set1(p.d[k]) / power_t(ind[k] + veps, p);
      sum = sum + alpha[k];
    }
  } else {
    V s = L::set1(0.0);
    for (int k = 0; k < R; ++k) s = s + L::set1(p.tau_c[k]) * ind[k + 1];
    const V tau = L::abs(s);
    const V one = L::set1(1.0);
    for (int k = 0; k <= R; ++k) {
      alpha[k] = L::set1(p.d[k]) * (one + power_t(tau / (ind[k] + veps), p));
      sum = sum + alpha[k];
    }
  }
  V omega[R + 1];
  for (int k = 0; k <= R; ++k) omega[k] = alpha[k] / sum;

  V coef[W];
  for (int l = 0; l < W; ++l) coef[l] = omega[0] * c0[l];
  for (int k = 1; k <= R; ++k)
    for (int l = 0; l < R; ++l) coef[l] = coef[l] + omega[k] * a[k - 1][l];
  for (int n = 0; n < p.nodes; ++n) L::store(out + n * out_stride, horner<V, W>(coef, p.xi[n]));
}

/// Fixed-R driver over a range of cells with lane width `Width`.
template <class V, int R, int Width>
inline void reconstruct_range(const KernelPlan& p, const WindowView& in, double eps, double* out, std::size_t begin,
                              std::size_t end) {
  for (std::size_t j = begin; j + Width <= end; j += Width)
    reconstruct_lanes<V, R>(p, in.first + static_cast<std::ptrdiff_t>(j) * in.cell_stride, in.cell_stride, eps,
                            out + j, in.cells);
}

template <class V, int Width>
inline void dispatch_r(const KernelPlan& p, const WindowView& in, double eps, double* out, std::size_t begin,
                       std::size_t end) {
  switch (p.r) {
    case 2: reconstruct_range<V, 2, Width>(p, in, eps, out, begin, end); break;
    case 3: reconstruct_range<V, 3, Width>(p, in, eps, out, begin, end); break;
    case 4: reconstruct_range<V, 4, Width>(p, in, eps, out, begin, end); break;
    case 5: reconstruct_range<V, 5, Width>(p, in, eps, out, begin, end); break;
    case 6: reconstruct_range<V, 6, Width>(p, in, eps, out, begin, end); break;
    default: break;
  }
}

}  // namespace wenolab::detail
