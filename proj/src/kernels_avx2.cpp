#include <immintrin.h>

#include "kernel_body.hpp"

namespace wenolab::detail {

namespace {

struct Vec4d {
  __m256d v;
};

inline Vec4d operator+(Vec4d a, Vec4d b) { return {_mm256_add_pd(a.v, b.v)}; }
inline Vec4d operator-(Vec4d a, Vec4d b) { return {_mm256_sub_pd(a.v, b.v)}; }
inline Vec4d operator*(Vec4d a, Vec4d b) { return {_mm256_mul_pd(a.v, b.v)}; }
inline Vec4d operator/(Vec4d a, Vec4d b) { return {_mm256_div_pd(a.v, b.v)}; }

}  // namespace

template <>
struct Lanes<Vec4d> {
  static Vec4d set1(double x) { return {_mm256_set1_pd(x)}; }
  static Vec4d load(const double* p, std::ptrdiff_t stride) {
    if (stride == 1) return {_mm256_loadu_pd(p)};
    return {_mm256_set_pd(p[3 * stride], p[2 * stride], p[stride], p[0])};
  }
  static void store(double* p, Vec4d v) { _mm256_storeu_pd(p, v.v); }
  static Vec4d abs(Vec4d v) { return {_mm256_andnot_pd(_mm256_set1_pd(-0.0), v.v)}; }
  static Vec4d pow(Vec4d v, double t) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v.v);
    for (double& x : lanes) x = std::pow(x, t);
    return {_mm256_load_pd(lanes)};
  }
};

void run_avx2(const KernelPlan& plan, const WindowView& in, double eps, double* out) {
  const std::size_t body = in.cells - in.cells % 4;
  dispatch_r<Vec4d, 4>(plan, in, eps, out, 0, body);
  run_scalar(plan, in, eps, out, body, in.cells);
}

}  // namespace wenolab::detail
