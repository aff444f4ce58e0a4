#include "wenolab/recon.hpp"

#include <cmath>
#include <numeric>

#include "stencil_tables.hpp"
#include "wenolab/exact.hpp"

namespace wenolab {

std::string to_string(Family f) {
  switch (f) {
    case Family::weno: return "weno";
    case Family::cweno: return "cweno";
    case Family::cwenoz: return "cwenoz";
  }
  return "?";
}

std::string to_string(TauVariant v) { return v == TauVariant::standard ? "standard" : "optimal"; }

double EpsilonRule::operator()(double h) const { return coeff * std::pow(h, power); }

ReconScheme::ReconScheme(const SchemeConfig& config) : config_(config), r_(0) {
  if (config.order < 2 * kMinR - 1 || config.order > 2 * kMaxR - 1 || config.order % 2 == 0)
    throw UnsupportedOrder("scheme order must be odd in [3, 11], got " + std::to_string(config.order));
  r_ = (config.order + 1) / 2;
  if (!(config.t > 0.0)) throw std::invalid_argument("scheme: exponent t must be positive");
  if (!(config.eps.coeff > 0.0)) throw std::invalid_argument("scheme: epsilon coefficient must be positive");
  if (config.family == Family::cwenoz && config.tau == TauVariant::standard && r_ < 3)
    throw UnsupportedOrder("standard tau needs r >= 3; use the optimal variant for order 3");
  if (config.family == Family::weno) return;

  if (!config.linear_weights.empty()) {
    if (static_cast<int>(config.linear_weights.size()) != r_ + 1)
      throw std::invalid_argument("scheme: expected r+1 linear weights");
    d_ = config.linear_weights;
  } else {
    d_.assign(r_ + 1, (1.0 - config.d0) / r_);
    d_[0] = config.d0;
  }
  double sum = 0.0;
  for (double d : d_) {
    if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("scheme: linear weights must lie in (0,1)");
    sum += d;
  }
  if (std::abs(sum - 1.0) > 1e-14) throw std::invalid_argument("scheme: linear weights must sum to 1");
}

double LocalPoly::operator()(double xi) const {
  double v = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * xi + *it;
  return v;
}

double LocalPoly::cell_average() const {
  // mean of xi^l over [-1/2, 1/2] is 2^-l / (l+1) for even l
  double s = 0.0;
  for (std::size_t l = 0; l < coeffs.size(); l += 2) s += coeffs[l] * std::ldexp(1.0, -static_cast<int>(l)) / (l + 1);
  return s;
}

LocalPoly LocalPoly::derivative() const {
  LocalPoly d;
  if (coeffs.size() <= 1) {
    d.coeffs = {0.0};
    return d;
  }
  d.coeffs.resize(coeffs.size() - 1);
  for (std::size_t l = 1; l < coeffs.size(); ++l) d.coeffs[l - 1] = l * coeffs[l];
  return d;
}

SmoothnessMatrix smoothness_matrix(int q) {
  if (q < 1) throw std::invalid_argument("smoothness_matrix: q must be >= 1");
  const auto exact = exact::smoothness_matrix(q);
  SmoothnessMatrix c;
  c.q = q;
  c.entries.reserve(exact.size());
  for (const auto& e : exact) c.entries.push_back(static_cast<double>(e));
  return c;
}

namespace {

double integrate_monomials(const std::vector<double>& p) {
  double s = 0.0;
  for (std::size_t n = 0; n < p.size(); n += 2) s += p[n] * std::ldexp(1.0, -static_cast<int>(n)) / (n + 1);
  return s;
}

double indicator_direct(const LocalPoly& p) {
  double total = 0.0;
  LocalPoly d = p.derivative();
  for (int l = 1; l <= p.degree(); ++l) {
    std::vector<double> sq(2 * d.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
      for (std::size_t j = 0; j < d.coeffs.size(); ++j) sq[i + j] += d.coeffs[i] * d.coeffs[j];
    total += integrate_monomials(sq);
    d = d.derivative();
  }
  return total;
}

double indicator_bilinear(const LocalPoly& p) {
  const int q = p.degree();
  if (q < 1) return 0.0;
  const SmoothnessMatrix c = smoothness_matrix(q);
  std::vector<double> w(q);
  double fact = 1.0;
  for (int i = 1; i <= q; ++i) {
    fact *= i;
    w[i - 1] = fact * p.coeffs[i];
  }
  double s = 0.0;
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) s += c(i, j) * w[i - 1] * w[j - 1];
  return s;
}

LocalPoly apply_table(const std::vector<double>& table, std::span<const double> averages) {
  const std::size_t n = averages.size();
  LocalPoly p;
  p.coeffs.assign(n, 0.0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) p.coeffs[l] += table[l * n + m] * averages[m];
  return p;
}

// Integer exponents use repeated products so batched kernels can round identically.
double powt(double x, double t) {
  const int n = static_cast<int>(t);
  if (n == t && n >= 1 && n <= 16) {
    double p = x;
    for (int i = 1; i < n; ++i) p = p * x;
    return p;
  }
  return std::pow(x, t);
}

}  // namespace

double jiang_shu_indicator(const LocalPoly& p, IndicatorMethod via) {
  return via == IndicatorMethod::direct ? indicator_direct(p) : indicator_bilinear(p);
}

LocalPoly substencil_poly(std::span<const double> averages, int k, int r) {
  if (k < 1 || k > r) throw std::invalid_argument("substencil_poly: k must be in [1, r]");
  if (static_cast<int>(averages.size()) != r) throw std::invalid_argument("substencil_poly: need r averages");
  return apply_table(detail::stencil_tables(r).sub[k - 1], averages);
}

LocalPoly optimal_poly(std::span<const double> averages, int r) {
  if (static_cast<int>(averages.size()) != 2 * r - 1)
    throw std::invalid_argument("optimal_poly: need 2r-1 averages");
  return apply_table(detail::stencil_tables(r).opt, averages);
}

LocalPoly central_poly(std::span<const double> window, int r, std::span<const double> d) {
  LocalPoly p0 = optimal_poly(window, r);
  for (int k = 1; k <= r; ++k) {
    const LocalPoly pk = substencil_poly(window.subspan(k - 1, r), k, r);
    for (int l = 0; l < r; ++l) p0.coeffs[l] -= d[k] * pk.coeffs[l];
  }
  for (double& a : p0.coeffs) a /= d[0];
  return p0;
}

std::vector<double> weno_optimal_weights(int r, double xi) {
  if (r < kMinR || r > kMaxR) throw UnsupportedOrder("weno_optimal_weights: unsupported r");
  if (!(xi >= -0.5 && xi <= 0.5)) throw std::invalid_argument("weno_optimal_weights: point outside the cell");
  if (xi == 0.5) return detail::stencil_tables(r).weno_right;
  if (xi == -0.5) return detail::stencil_tables(r).weno_left;
  const auto q = exact::weno_linear_weights(r, exact::Rational(xi));
  if (q.empty()) throw NoPositiveWeights("no linear WENO weights exist at xi = " + std::to_string(xi));
  std::vector<double> d;
  for (const auto& v : q) {
    if (v <= 0 || v >= 1) throw NoPositiveWeights("linear WENO weights leave (0,1) at xi = " + std::to_string(xi));
    d.push_back(static_cast<double>(v));
  }
  return d;
}

std::vector<int> tau_coefficients(int r, TauVariant variant) {
  if (variant == TauVariant::standard) {
    switch (r) {
      case 3: return {1, 0, -1};
      case 4: return {1, -1, -1, 1};
      case 5: return {1, 0, 0, 0, -1};
      case 6: return {1, -1, 0, 0, -1, 1};
      default: break;
    }
  } else {
    switch (r) {
      case 2: return {1, -1};
      case 3: return {1, 0, -1};
      case 4: return {1, 3, -3, -1};
      case 5: return {1, 2, -6, 2, 1};
      case 6: return {1, 1, -8, 8, -1, -1};
      default: break;
    }
  }
  throw UnsupportedOrder("no " + to_string(variant) + " tau for r = " + std::to_string(r));
}

int tau_truncation_order(int r, TauVariant variant) {
  tau_coefficients(r, variant);  // validates
  if (variant == TauVariant::standard) return r + 2;
  static constexpr int optimal[] = {0, 0, 3, 5, 7, 8, 9};
  return optimal[r];
}

double tau(std::span<const double> indicators, TauVariant variant) {
  const auto c = tau_coefficients(static_cast<int>(indicators.size()), variant);
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * indicators[k];
  return std::abs(s);
}

WeightSet nonlinear_weights(const ReconScheme& scheme, std::span<const double> indicators, double h,
                            std::optional<double> xi) {
  const int r = scheme.r();
  const double eps = scheme.epsilon(h);
  const double t = scheme.t();
  WeightSet ws;
  ws.indicators.assign(indicators.begin(), indicators.end());

  std::vector<double> alpha;
  if (scheme.family() == Family::weno) {
    if (!xi) throw std::invalid_argument("nonlinear_weights: WENO needs the reconstruction point");
    if (static_cast<int>(indicators.size()) != r) throw std::invalid_argument("nonlinear_weights: need r indicators");
    const auto d = weno_optimal_weights(r, *xi);
    for (int k = 0; k < r; ++k) alpha.push_back(d[k] / powt(indicators[k] + eps, t));
  } else {
    if (static_cast<int>(indicators.size()) != r + 1)
      throw std::invalid_argument("nonlinear_weights: need r+1 indicators");
    const auto d = scheme.linear_weights();
    if (scheme.family() == Family::cweno) {
      for (int k = 0; k <= r; ++k) alpha.push_back(d[k] / powt(indicators[k] + eps, t));
    } else {
      const double tv = tau(indicators.subspan(1), scheme.tau_variant());
      ws.tau = tv;
      for (int k = 0; k <= r; ++k) alpha.push_back(d[k] * (1.0 + powt(tv / (indicators[k] + eps), t)));
    }
  }
  const double sum = std::accumulate(alpha.begin(), alpha.end(), 0.0);
  for (double a : alpha) ws.omega.push_back(a / sum);
  return ws;
}

Reconstruction reconstruct(const ReconScheme& scheme, std::span<const double> window, double h) {
  const int r = scheme.r();
  if (static_cast<int>(window.size()) != 2 * r - 1) throw std::invalid_argument("reconstruct: need 2r-1 averages");
  std::vector<LocalPoly> sub;
  for (int k = 1; k <= r; ++k) sub.push_back(substencil_poly(window.subspan(k - 1, r), k, r));

  Reconstruction rec;
  if (scheme.family() == Family::weno) {
    std::vector<double> ind;
    for (const auto& p : sub) ind.push_back(jiang_shu_indicator(p));
    rec.weights = nonlinear_weights(scheme, ind, h, 0.5);
    rec.weights_left = nonlinear_weights(scheme, ind, h, -0.5);
    for (int k = 0; k < r; ++k) {
      rec.right += rec.weights.omega[k] * sub[k](0.5);
      rec.left += rec.weights_left->omega[k] * sub[k](-0.5);
    }
    return rec;
  }

  const auto d = scheme.linear_weights();
  const LocalPoly p0 = central_poly(window, r, d);
  std::vector<double> ind{jiang_shu_indicator(p0)};
  for (const auto& p : sub) ind.push_back(jiang_shu_indicator(p));
  rec.weights = nonlinear_weights(scheme, ind, h);

  LocalPoly prec;
  prec.coeffs.assign(2 * r - 1, 0.0);
  for (int l = 0; l < 2 * r - 1; ++l) prec.coeffs[l] = rec.weights.omega[0] * p0.coeffs[l];
  for (int k = 1; k <= r; ++k)
    for (int l = 0; l < r; ++l) prec.coeffs[l] += rec.weights.omega[k] * sub[k - 1].coeffs[l];
  rec.left = prec(-0.5);
  rec.right = prec(0.5);
  rec.poly = std::move(prec);
  return rec;
}

}  // namespace wenolab
