#include "wenolab/physics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace wenolab {

namespace {

bool finite(std::span<const double> u) {
  return std::all_of(u.begin(), u.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

double EulerModel::pressure(std::span<const double> u) const {
  return (gamma_ - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
}

void EulerModel::conserved(double rho, double vel, double p, std::span<double> u) const {
  u[0] = rho;
  u[1] = rho * vel;
  u[2] = p / (gamma_ - 1.0) + 0.5 * rho * vel * vel;
}

void EulerModel::flux(std::span<const double> u, std::span<double> f) const {
  const double vel = u[1] / u[0];
  const double p = pressure(u);
  f[0] = u[1];
  f[1] = u[1] * vel + p;
  f[2] = vel * (u[2] + p);
}

double EulerModel::max_wavespeed(std::span<const double> u) const {
  const double c = std::sqrt(gamma_ * pressure(u) / u[0]);
  return std::abs(u[1] / u[0]) + c;
}

bool EulerModel::admissible(std::span<const double> u) const {
  return finite(u) && u[0] > 0.0 && pressure(u) > 0.0;
}

void EulerModel::eigensystem(std::span<const double> u, std::span<double> L, std::span<double> R) const {
  const double vel = u[1] / u[0];
  const double p = pressure(u);
  const double c = std::sqrt(gamma_ * p / u[0]);
  const double H = (u[2] + p) / u[0];
  // columns: u - c, u, u + c
  const double right[9] = {1.0, 1.0, 1.0,
                           vel - c, vel, vel + c,
                           H - vel * c, 0.5 * vel * vel, H + vel * c};
  const double b1 = (gamma_ - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * vel * vel;
  const double left[9] = {0.5 * (b2 + vel / c), 0.5 * (-b1 * vel - 1.0 / c), 0.5 * b1,
                          1.0 - b2, b1 * vel, -b1,
                          0.5 * (b2 - vel / c), 0.5 * (-b1 * vel + 1.0 / c), 0.5 * b1};
  std::copy(right, right + 9, R.begin());
  std::copy(left, left + 9, L.begin());
}

ShallowWaterModel::ShallowWaterModel(ScalarFunction z, ScalarFunction z_x, double g)
    : z_(std::move(z)), z_x_(std::move(z_x)), g_(g) {
  if (!(g_ > 0.0)) throw std::invalid_argument("gravity must be positive");
}

void ShallowWaterModel::flux(std::span<const double> u, std::span<double> f) const {
  f[0] = u[1];
  f[1] = u[1] * u[1] / u[0] + 0.5 * g_ * u[0] * u[0];
}

double ShallowWaterModel::max_wavespeed(std::span<const double> u) const {
  return std::abs(u[1] / u[0]) + std::sqrt(g_ * u[0]);
}

bool ShallowWaterModel::admissible(std::span<const double> u) const { return finite(u) && u[0] > 0.0; }

void ShallowWaterModel::eigensystem(std::span<const double> u, std::span<double> L, std::span<double> R) const {
  const double vel = u[1] / u[0];
  const double c = std::sqrt(g_ * u[0]);
  R[0] = 1.0;
  R[1] = 1.0;
  R[2] = vel - c;
  R[3] = vel + c;
  L[0] = (vel + c) / (2.0 * c);
  L[1] = -1.0 / (2.0 * c);
  L[2] = -(vel - c) / (2.0 * c);
  L[3] = 1.0 / (2.0 * c);
}

void ShallowWaterModel::source_average(const SourceSamples& s, std::span<double> out) const {
  const std::size_t n = (std::size_t{1} << s.level) + 1;
  std::vector<double> heights(n);
  for (std::size_t i = 0; i < n; ++i) heights[i] = s.values[i * s.components];
  out[0] = 0.0;
  out[1] = swe_source_average(heights, s.x_lo, s.h, s.level, z_x_, g_);
}

double romberg_mean(std::span<const double> f, int level) {
  const std::size_t n = std::size_t{1} << level;
  if (level < 0 || f.size() != n + 1) throw std::invalid_argument("romberg_mean: need 2^level + 1 samples");
  std::vector<double> R(level + 1);
  // R[m] holds the trapezoid rule with 2^m panels, then is overwritten by extrapolations.
  for (int m = 0; m <= level; ++m) {
    const std::size_t step = n >> m;
    const std::size_t panels = std::size_t{1} << m;
    double s = 0.5 * (f[0] + f[n]);
    for (std::size_t i = step; i < n; i += step) s += f[i];
    R[m] = s / static_cast<double>(panels);
  }
  for (int j = 1; j <= level; ++j) {
    const double fac = std::pow(4.0, j) - 1.0;
    for (int m = level; m >= j; --m) R[m] = R[m] + (R[m] - R[m - 1]) / fac;
  }
  return R[level];
}

double swe_source_average(std::span<const double> heights, double x_lo, double dx, int level,
                          const ScalarFunction& z_x, double g) {
  const std::size_t n = std::size_t{1} << level;
  std::vector<double> f(n + 1);
  for (std::size_t i = 0; i <= n; ++i) f[i] = -g * heights[i] * z_x(x_lo + dx * static_cast<double>(i) / n);
  return romberg_mean(f, level);
}

double smooth_wave(double x) {
  using std::numbers::pi;
  return std::sin(pi * x) - std::sin(15.0 * pi * x) * std::exp(-20.0 * x * x);
}

namespace {

double gauss_g(double x, double beta, double z) { return std::exp(-beta * (x - z) * (x - z)); }
double ellipse_f(double x, double alpha, double a) {
  return std::sqrt(std::max(1.0 - alpha * alpha * (x - a) * (x - a), 0.0));
}

constexpr double kDelta = 0.005;

}  // namespace

double ellipse_bump(double x) {
  const double a = 0.5, alpha = 10.0;
  return (ellipse_f(x, alpha, a - kDelta) + ellipse_f(x, alpha, a + kDelta) + 4.0 * ellipse_f(x, alpha, a)) / 6.0;
}

double jiangshu_composite(double x) {
  // Gaussian on [-0.8, -0.6], square on [-0.4, -0.2], triangle on [0, 0.2], semi-ellipse on [0.4, 0.6]
  if (x >= -0.8 && x <= -0.6) {
    const double z = -0.7;
    const double beta = std::log(2.0) / (36.0 * kDelta * kDelta);
    return (gauss_g(x, beta, z - kDelta) + gauss_g(x, beta, z + kDelta) + 4.0 * gauss_g(x, beta, z)) / 6.0;
  }
  if (x >= -0.4 && x <= -0.2) return 1.0;
  if (x >= 0.0 && x <= 0.2) return 1.0 - std::abs(10.0 * (x - 0.1));
  if (x >= 0.4 && x <= 0.6) return ellipse_bump(x);
  return 0.0;
}

}  // namespace wenolab
