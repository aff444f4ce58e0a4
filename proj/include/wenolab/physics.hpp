#pragma once

#include <span>

#include "wenolab/mesh.hpp"
#include "wenolab/solver.hpp"

namespace wenolab {

/// u_t + a u_x = 0.
class AdvectionModel final : public FluxModel {
 public:
  explicit AdvectionModel(double speed = 1.0) : a_(speed) {}
  int components() const override { return 1; }
  void flux(std::span<const double> u, std::span<double> f) const override { f[0] = a_ * u[0]; }
  double max_wavespeed(std::span<const double>) const override { return a_ < 0 ? -a_ : a_; }

 private:
  double a_;
};

/// 1D Euler equations for (rho, rho u, E) of an ideal gas.
class EulerModel final : public FluxModel {
 public:
  explicit EulerModel(double gamma = 1.4) : gamma_(gamma) {}
  double gamma() const { return gamma_; }
  int components() const override { return 3; }
  void flux(std::span<const double> u, std::span<double> f) const override;
  double max_wavespeed(std::span<const double> u) const override;
  /// rho > 0 and p > 0, all finite.
  bool admissible(std::span<const double> u) const override;
  bool has_eigensystem() const override { return true; }
  void eigensystem(std::span<const double> u, std::span<double> left, std::span<double> right) const override;

  double pressure(std::span<const double> u) const;
  /// Conserved state from (rho, velocity, pressure).
  void conserved(double rho, double vel, double p, std::span<double> u) const;

 private:
  double gamma_;
};

/// Shallow water with bottom topography z(x): source (0, -g h z_x).
class ShallowWaterModel final : public FluxModel {
 public:
  ShallowWaterModel(ScalarFunction z, ScalarFunction z_x, double g = 9.81);
  double g() const { return g_; }
  double bottom(double x) const { return z_(x); }
  int components() const override { return 2; }
  void flux(std::span<const double> u, std::span<double> f) const override;
  double max_wavespeed(std::span<const double> u) const override;
  /// h > 0, all finite.
  bool admissible(std::span<const double> u) const override;
  bool has_eigensystem() const override { return true; }
  void eigensystem(std::span<const double> u, std::span<double> left, std::span<double> right) const override;
  bool has_source() const override { return true; }
  void source_average(const SourceSamples& samples, std::span<double> out) const override;

 private:
  ScalarFunction z_;
  ScalarFunction z_x_;
  double g_;
};

/// Richardson-extrapolated trapezoid (Romberg) mean over [-1/2, 1/2] from samples at
/// the 2^level + 1 equispaced nodes, endpoints included.
double romberg_mean(std::span<const double> samples, int level);

/// Cell average of -g h z_x from water heights at the dyadic nodes of the cell [x_lo, x_lo + dx].
double swe_source_average(std::span<const double> heights, double x_lo, double dx, int level,
                          const ScalarFunction& z_x, double g);

/// Initial data of the smooth transport test on [-1, 1].
double smooth_wave(double x);
/// Square, triangle, Gaussian and semi-ellipse profile of Jiang and Shu on [-1, 1].
double jiangshu_composite(double x);
/// Smoothed semi-ellipse centred at 0.5.
double ellipse_bump(double x);

}  // namespace wenolab
