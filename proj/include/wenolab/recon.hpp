#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wenolab {

/// Substencil widths supported by the coefficient tables (orders 3 to 11).
inline constexpr int kMinR = 2;
inline constexpr int kMaxR = 6;

enum class Family { weno, cweno, cwenoz };
enum class TauVariant { standard, optimal };

std::string to_string(Family f);
std::string to_string(TauVariant v);

class UnsupportedOrder : public std::invalid_argument {
 public:
  explicit UnsupportedOrder(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when the linear WENO weights at a point do not exist or are not all in (0,1).
class NoPositiveWeights : public std::domain_error {
 public:
  explicit NoPositiveWeights(const std::string& what) : std::domain_error(what) {}
};

/// epsilon(h) = coeff * h^power
struct EpsilonRule {
  double coeff = 1.0;
  double power = 2.0;
  double operator()(double h) const;
};

struct SchemeConfig {
  Family family = Family::cwenoz;
  int order = 5;
  /// Weight of the central polynomial; d_1..d_r share the remainder equally.
  double d0 = 0.5;
  /// Optional full override of (d_0, ..., d_r) for CWENO/CWENOZ.
  std::vector<double> linear_weights;
  double t = 2.0;
  EpsilonRule eps{};
  TauVariant tau = TauVariant::optimal;
};

/// An immutable, validated reconstruction operator.
class ReconScheme {
 public:
  explicit ReconScheme(const SchemeConfig& config);

  const SchemeConfig& config() const { return config_; }
  Family family() const { return config_.family; }
  int order() const { return config_.order; }
  int r() const { return r_; }
  double t() const { return config_.t; }
  TauVariant tau_variant() const { return config_.tau; }
  double epsilon(double h) const { return config_.eps(h); }
  /// d_0..d_r for CWENO/CWENOZ; empty for WENO, whose weights depend on the point.
  std::span<const double> linear_weights() const { return d_; }

 private:
  SchemeConfig config_;
  int r_;
  std::vector<double> d_;
};

/// Polynomial in the local variable xi = (x - x_0) / h of the reconstruction cell.
struct LocalPoly {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double xi) const;
  /// Mean over the reconstruction cell xi in [-1/2, 1/2].
  double cell_average() const;
  LocalPoly derivative() const;
};

/// Matrix C of the bilinear form I[P] = <w, C w>, with w_i = i! a_i (1-based i).
struct SmoothnessMatrix {
  int q = 0;
  std::vector<double> entries;  // q*q row-major

  double operator()(int i, int j) const { return entries[(i - 1) * q + (j - 1)]; }
};

SmoothnessMatrix smoothness_matrix(int q);

enum class IndicatorMethod { direct, bilinear };

/// Jiang-Shu indicator sum_{l>=1} h^(2l-1) int_{cell} (P^(l))^2 dx.
double jiang_shu_indicator(const LocalPoly& p, IndicatorMethod via = IndicatorMethod::bilinear);

/// P_k of degree r-1 from the r averages of substencil S_k = {-r+k, ..., k-1}, k = 1..r.
LocalPoly substencil_poly(std::span<const double> averages, int k, int r);
/// P_opt of degree 2r-2 from the 2r-1 averages of cells -r+1..r-1.
LocalPoly optimal_poly(std::span<const double> averages, int r);
/// P_0 = (P_opt - sum_k d_k P_k) / d_0 on a centred window of 2r-1 averages.
LocalPoly central_poly(std::span<const double> window, int r, std::span<const double> d);

/// Linear WENO weights d_1..d_r at xi (local units). Throws NoPositiveWeights when none exist in (0,1).
std::vector<double> weno_optimal_weights(int r, double xi);

/// Signed-combination coefficients of tau for I_1..I_r.
std::vector<int> tau_coefficients(int r, TauVariant variant);
/// Leading truncation order of tau on smooth data.
int tau_truncation_order(int r, TauVariant variant);
/// Global smoothness indicator from I_1..I_r.
double tau(std::span<const double> indicators, TauVariant variant);

struct WeightSet {
  /// omega_0..omega_r for CWENO/CWENOZ; omega_1..omega_r for WENO.
  std::vector<double> omega;
  /// I[P_0]..I[P_r] for CWENO/CWENOZ; I[P_1]..I[P_r] for WENO.
  std::vector<double> indicators;
  std::optional<double> tau;
};

/// Nonlinear weights. `xi` is the reconstruction point and is required for WENO only.
WeightSet nonlinear_weights(const ReconScheme& scheme, std::span<const double> indicators, double h,
                            std::optional<double> xi = std::nullopt);

struct Reconstruction {
  /// P_rec for CWENO/CWENOZ.
  std::optional<LocalPoly> poly;
  double left = 0.0;   // value at x_0 - h/2
  double right = 0.0;  // value at x_0 + h/2
  /// Cell weights for CWENO/CWENOZ; weights at x_0 + h/2 for WENO.
  WeightSet weights;
  /// WENO only: weights at x_0 - h/2.
  std::optional<WeightSet> weights_left;
};

/// Reconstruct from the 2r-1 averages centred on the reconstruction cell.
Reconstruction reconstruct(const ReconScheme& scheme, std::span<const double> window, double h);

}  // namespace wenolab
