#include "riemann.hpp"

#include <cmath>
#include <stdexcept>

namespace riemann {

ExactSolver::ExactSolver(Primitive left, Primitive right, double gamma) : L_(left), R_(right), g_(gamma) {
  cL_ = std::sqrt(g_ * L_.p / L_.rho);
  cR_ = std::sqrt(g_ * R_.p / R_.rho);
  if (2.0 / (g_ - 1.0) * (cL_ + cR_) <= R_.u - L_.u) throw std::domain_error("riemann: vacuum is generated");

  // Newton iteration on the pressure function, started from the two-rarefaction guess
  const double z = (g_ - 1.0) / (2.0 * g_);
  double p = std::pow((cL_ + cR_ - 0.5 * (g_ - 1.0) * (R_.u - L_.u)) / (cL_ / std::pow(L_.p, z) + cR_ / std::pow(R_.p, z)), 1.0 / z);
  for (int it = 0; it < 100; ++it) {
    double dL = 0.0, dR = 0.0;
    const double F = f(p, L_, cL_, dL) + f(p, R_, cR_, dR) + R_.u - L_.u;
    double next = p - F / (dL + dR);
    if (next <= 0.0) next = 0.5 * p;
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    if (change < 1e-15) break;
  }
  p_star_ = p;
  double d = 0.0;
  u_star_ = 0.5 * (L_.u + R_.u) + 0.5 * (f(p, R_, cR_, d) - f(p, L_, cL_, d));
}

double ExactSolver::f(double p, const Primitive& s, double c, double& deriv) const {
  if (p > s.p) {
    const double A = 2.0 / ((g_ + 1.0) * s.rho), B = (g_ - 1.0) / (g_ + 1.0) * s.p;
    const double q = std::sqrt(A / (p + B));
    deriv = q * (1.0 - 0.5 * (p - s.p) / (B + p));
    return (p - s.p) * q;
  }
  const double r = p / s.p;
  deriv = 1.0 / (s.rho * c) * std::pow(r, -(g_ + 1.0) / (2.0 * g_));
  return 2.0 * c / (g_ - 1.0) * (std::pow(r, (g_ - 1.0) / (2.0 * g_)) - 1.0);
}

Primitive ExactSolver::sample(double s) const {
  const double gm = (g_ - 1.0) / (g_ + 1.0);
  const double ps = p_star_, us = u_star_;
  if (s <= us) {
    const Primitive& W = L_;
    const double c = cL_;
    if (ps > W.p) {
      const double shock = W.u - c * std::sqrt((g_ + 1.0) / (2.0 * g_) * ps / W.p + (g_ - 1.0) / (2.0 * g_));
      if (s <= shock) return W;
      return {W.rho * (ps / W.p + gm) / (gm * ps / W.p + 1.0), us, ps};
    }
    const double head = W.u - c;
    const double cs = c * std::pow(ps / W.p, (g_ - 1.0) / (2.0 * g_));
    const double tail = us - cs;
    if (s <= head) return W;
    if (s >= tail) return {W.rho * std::pow(ps / W.p, 1.0 / g_), us, ps};
    const double cf = 2.0 / (g_ + 1.0) * (c + 0.5 * (g_ - 1.0) * (W.u - s));
    return {W.rho * std::pow(cf / c, 2.0 / (g_ - 1.0)), 2.0 / (g_ + 1.0) * (c + 0.5 * (g_ - 1.0) * W.u + s),
            W.p * std::pow(cf / c, 2.0 * g_ / (g_ - 1.0))};
  }
  const Primitive& W = R_;
  const double c = cR_;
  if (ps > W.p) {
    const double shock = W.u + c * std::sqrt((g_ + 1.0) / (2.0 * g_) * ps / W.p + (g_ - 1.0) / (2.0 * g_));
    if (s >= shock) return W;
    return {W.rho * (ps / W.p + gm) / (gm * ps / W.p + 1.0), us, ps};
  }
  const double head = W.u + c;
  const double cs = c * std::pow(ps / W.p, (g_ - 1.0) / (2.0 * g_));
  const double tail = us + cs;
  if (s >= head) return W;
  if (s <= tail) return {W.rho * std::pow(ps / W.p, 1.0 / g_), us, ps};
  const double cf = 2.0 / (g_ + 1.0) * (c - 0.5 * (g_ - 1.0) * (W.u - s));
  return {W.rho * std::pow(cf / c, 2.0 / (g_ - 1.0)), 2.0 / (g_ + 1.0) * (-c + 0.5 * (g_ - 1.0) * W.u + s),
          W.p * std::pow(cf / c, 2.0 * g_ / (g_ - 1.0))};
}

}  // namespace riemann
