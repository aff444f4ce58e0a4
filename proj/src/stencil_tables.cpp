#include "stencil_tables.hpp"

#include <array>
#include <cassert>
#include <mutex>
#include <optional>

#include "wenolab/exact.hpp"

namespace wenolab {
namespace exact {

namespace {

Rational pow_q(const Rational& x, int n) {
  Rational p = 1;
  for (int i = 0; i < n; ++i) p *= x;
  return p;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Gauss-Jordan inverse of an n*n row-major matrix; the matrices used here are never singular.
std::vector<Rational> invert(std::vector<Rational> a, int n) {
  std::vector<Rational> inv(static_cast<std::size_t>(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    assert(pivot < n && "cell-moment matrix is invertible");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a[col * n + j], a[pivot * n + j]);
        std::swap(inv[col * n + j], inv[pivot * n + j]);
      }
    }
    const Rational p = a[col * n + col];
    for (int j = 0; j < n; ++j) {
      a[col * n + j] /= p;
      inv[col * n + j] /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i * n + col] == 0) continue;
      const Rational f = a[i * n + col];
      for (int j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[col * n + j];
        inv[i * n + j] -= f * inv[col * n + j];
      }
    }
  }
  return inv;
}

// Window weights of the value at xi of the polynomial fitted to cells first..first+n-1.
std::vector<Rational> point_value_weights(int first, int n, const Rational& xi) {
  const auto coeffs = average_to_coeffs(first, n);
  std::vector<Rational> w(n, Rational(0));
  Rational xp = 1;
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) w[m] += xp * coeffs[l * n + m];
    xp *= xi;
  }
  return w;
}

}  // namespace

Rational cell_moment(int j, int l) {
  const Rational hi(2 * j + 1, 2);
  const Rational lo(2 * j - 1, 2);
  return (pow_q(hi, l + 1) - pow_q(lo, l + 1)) / (l + 1);
}

std::vector<Rational> average_to_coeffs(int first, int n) {
  std::vector<Rational> moments(static_cast<std::size_t>(n) * n);
  for (int row = 0; row < n; ++row)
    for (int l = 0; l < n; ++l) moments[row * n + l] = cell_moment(first + row, l);
  return invert(std::move(moments), n);
}

std::vector<Rational> smoothness_matrix(int q) {
  std::vector<Rational> c(static_cast<std::size_t>(q) * q, Rational(0));
  for (int i = 1; i <= q; ++i) {
    for (int j = i; j <= q; ++j) {
      if ((i + j) % 2 != 0) continue;
      Rational s = 0;
      for (int m = 1; m <= i; ++m) {
        const int e = 2 * m - i - j;  // always <= 0
        s += Rational(1, 1) / (pow_q(Rational(2), -e) * factorial(i - m) * factorial(j - m) * (i + j - 2 * m + 1));
      }
      c[(i - 1) * q + (j - 1)] = s;
      c[(j - 1) * q + (i - 1)] = s;
    }
  }
  return c;
}

std::vector<Rational> weno_linear_weights(int r, const Rational& xi) {
  const int rows = 2 * r - 1;
  const int cols = r + 1;  // d_1..d_r | rhs
  std::vector<Rational> a(static_cast<std::size_t>(rows) * cols, Rational(0));
  for (int k = 1; k <= r; ++k) {
    const auto w = point_value_weights(-r + k, r, xi);
    for (int m = 0; m < r; ++m) a[(k - 1 + m) * cols + (k - 1)] = w[m];
  }
  const auto opt = point_value_weights(-r + 1, rows, xi);
  for (int m = 0; m < rows; ++m) a[m * cols + r] = opt[m];

  int rank = 0;
  for (int col = 0; col < r; ++col) {
    int pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) return {};
    for (int j = 0; j < cols; ++j) std::swap(a[rank * cols + j], a[pivot * cols + j]);
    const Rational p = a[rank * cols + col];
    for (int j = 0; j < cols; ++j) a[rank * cols + j] /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || a[i * cols + col] == 0) continue;
      const Rational f = a[i * cols + col];
      for (int j = 0; j < cols; ++j) a[i * cols + j] -= f * a[rank * cols + j];
    }
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    if (a[i * cols + r] != 0) return {};  // overdetermined system is inconsistent
  std::vector<Rational> d(r);
  for (int k = 0; k < r; ++k) d[k] = a[k * cols + r];
  return d;
}

}  // namespace exact

namespace detail {

namespace {

std::vector<double> to_double(const std::vector<exact::Rational>& q) {
  std::vector<double> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = static_cast<double>(q[i]);
  return out;
}

std::vector<double> weno_weights_or_empty(int r, int sign) {
  const auto d = exact::weno_linear_weights(r, exact::Rational(sign, 2));
  return to_double(d);
}

StencilTables build(int r) {
  StencilTables t;
  t.r = r;
  for (int k = 1; k <= r; ++k) t.sub.push_back(to_double(exact::average_to_coeffs(-r + k, r)));
  t.opt = to_double(exact::average_to_coeffs(-r + 1, 2 * r - 1));
  t.folded_sub = folded_smoothness(r - 1);
  t.folded_opt = folded_smoothness(2 * r - 2);
  t.weno_left = weno_weights_or_empty(r, -1);
  t.weno_right = weno_weights_or_empty(r, +1);
  return t;
}

}  // namespace

std::vector<double> folded_smoothness(int q) {
  const int n = q + 1;
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  if (q < 1) return out;
  const auto c = exact::smoothness_matrix(q);
  exact::Rational fi = 1;
  for (int i = 1; i <= q; ++i) {
    fi *= i;
    exact::Rational fj = 1;
    for (int j = 1; j <= q; ++j) {
      fj *= j;
      out[i * n + j] = static_cast<double>(c[(i - 1) * q + (j - 1)] * fi * fj);
    }
  }
  return out;
}

const StencilTables& stencil_tables(int r) {
  if (r < kMinR || r > kMaxR) throw UnsupportedOrder("no stencil tables for r = " + std::to_string(r));
  static std::array<std::optional<StencilTables>, kMaxR + 1> cache;
  static std::array<std::once_flag, kMaxR + 1> once;
  std::call_once(once[r], [r] { cache[r] = build(r); });
  return *cache[r];
}

}  // namespace detail
}  // namespace wenolab
