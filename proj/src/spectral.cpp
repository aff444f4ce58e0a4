#include "wenolab/spectral.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "wenolab/kernels.hpp"
#include "wenolab/mesh.hpp"

namespace wenolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sin/cos(2 pi l x_j) at cell centres x_j = (j + 1/2) / n, reduced exactly before the trig call.
struct CenterTrig {
  int n = 0;
  int N = 0;
  std::vector<double> s, c;  // [(l-1) * n + j]

  explicit CenterTrig(int modes) : n(2 * modes + 1), N(modes) {
    s.resize(static_cast<std::size_t>(N) * n);
    c.resize(s.size());
    for (int l = 1; l <= N; ++l)
      for (int j = 0; j < n; ++j) {
        const long phase = (static_cast<long>(l) * (2 * j + 1)) % (2L * n);
        const double angle = std::numbers::pi * static_cast<double>(phase) / n;
        s[(l - 1) * n + j] = std::sin(angle);
        c[(l - 1) * n + j] = std::cos(angle);
      }
  }
};

double sinc_factor(int l, int n) {
  const double y = std::numbers::pi * l / n;
  return std::sin(y) / y;
}

int modes_for(std::size_t cells) {
  if (cells < 3 || cells % 2 == 0) throw std::invalid_argument("spectral operators need an odd cell count >= 3");
  return static_cast<int>((cells - 1) / 2);
}

}  // namespace

DerivativeOperator upwind_fv_derivative(const ReconScheme& scheme) {
  auto kernel = std::make_shared<ReconKernel>(scheme, std::vector<double>{0.5});
  const int r = scheme.r();
  return [kernel, r](std::span<const double> avg, std::span<double> out) {
    const int n = static_cast<int>(avg.size());
    const Grid grid(0.0, 1.0, n, r);
    CellField field(grid, 1);
    std::copy(avg.begin(), avg.end(), field.interior(0).begin());
    fill_ghosts(field, BoundaryCondition::periodic);
    // right-boundary values of cells -1..n-1
    std::vector<double> right(n + 1);
    const WindowView view{&field.at(0, -1 - (r - 1)), 1, static_cast<std::size_t>(n + 1)};
    kernel->run(view, grid.h(), right);
    for (int j = 0; j < n; ++j) out[j] = (right[j + 1] - right[j]) / grid.h();
  };
}

DerivativeOperator linear_upwind_derivative(int r) {
  // window weights of P_opt(1/2)
  std::vector<double> w(2 * r - 1);
  for (int m = 0; m < 2 * r - 1; ++m) {
    std::vector<double> e(2 * r - 1, 0.0);
    e[m] = 1.0;
    w[m] = optimal_poly(e, r)(0.5);
  }
  return [w, r](std::span<const double> avg, std::span<double> out) {
    const int n = static_cast<int>(avg.size());
    const double h = 1.0 / n;
    auto at = [&](int j) { return avg[((j % n) + n) % n]; };
    std::vector<double> right(n);
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int m = 0; m < 2 * r - 1; ++m) v += w[m] * at(j - (r - 1) + m);
      right[j] = v;
    }
    for (int j = 0; j < n; ++j) out[j] = (right[j] - right[(j - 1 + n) % n]) / h;
  };
}

DerivativeOperator first_order_upwind() {
  return [](std::span<const double> avg, std::span<double> out) {
    const std::size_t n = avg.size();
    const double h = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = (avg[j] - avg[(j + n - 1) % n]) / h;
  };
}

DerivativeOperator central_difference() {
  return [](std::span<const double> avg, std::span<double> out) {
    const std::size_t n = avg.size();
    const double h = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = (avg[(j + 1) % n] - avg[(j + n - 1) % n]) / (2.0 * h);
  };
}

DerivativeOperator exact_spectral_derivative() {
  return [](std::span<const double> avg, std::span<double> out) {
    const int N = modes_for(avg.size());
    const int n = 2 * N + 1;
    const auto coeff = project_averaged_modes(avg, N);
    const CenterTrig trig(N);
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int l = 1; l <= N; ++l) {
        const double sl = coeff[2 * l - 1], cl = coeff[2 * l];
        const double g = sinc_factor(l, n);
        // d/dx (s sin + c cos) = 2 pi l (s cos - c sin), expressed through averaged modes
        v += kTwoPi * l * g * (sl * trig.c[(l - 1) * n + j] - cl * trig.s[(l - 1) * n + j]);
      }
      out[j] = v;
    }
  };
}

std::vector<double> mode_averages(int N, int k, bool sine) {
  const int n = 2 * N + 1;
  const double h = 1.0 / n;
  const double scale = kTwoPi * k * h;
  std::vector<double> avg(n);
  for (int j = 0; j < n; ++j) {
    const double a = kTwoPi * k * j * h;
    const double b = kTwoPi * k * (j + 1) * h;
    avg[j] = sine ? (std::cos(a) - std::cos(b)) / scale : (std::sin(b) - std::sin(a)) / scale;
  }
  return avg;
}

std::vector<double> project_averaged_modes(std::span<const double> values, int N) {
  const int n = 2 * N + 1;
  if (static_cast<int>(values.size()) != n) throw std::invalid_argument("project_averaged_modes: size mismatch");
  const CenterTrig trig(N);
  std::vector<double> coeff(n, 0.0);
  double mean = 0.0;
  for (double v : values) mean += v;
  coeff[0] = mean / n;
  for (int l = 1; l <= N; ++l) {
    double s = 0.0, c = 0.0;
    for (int j = 0; j < n; ++j) {
      s += values[j] * trig.s[(l - 1) * n + j];
      c += values[j] * trig.c[(l - 1) * n + j];
    }
    const double norm = 2.0 / (n * sinc_factor(l, n));
    coeff[2 * l - 1] = s * norm;
    coeff[2 * l] = c * norm;
  }
  return coeff;
}

OmegaMatrix build_omega(const DerivativeOperator& op, int N) {
  if (N < 1) throw std::invalid_argument("build_omega: N must be positive");
  const int n = 2 * N + 1;
  OmegaMatrix omega{N, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  std::vector<double> out(n);
  for (int k = 1; k <= N; ++k) {
    for (int sine = 1; sine >= 0; --sine) {
      const auto avg = mode_averages(N, k, sine == 1);
      op(avg, out);
      const auto coeff = project_averaged_modes(out, N);
      const int col = sine ? 2 * k - 1 : 2 * k;
      for (int row = 0; row < n; ++row) omega(row, col) = coeff[row];
    }
  }
  return omega;
}

OmegaMatrix exact_derivative_matrix(int N) {
  const int n = 2 * N + 1;
  OmegaMatrix d{N, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int k = 1; k <= N; ++k) {
    d(2 * k, 2 * k - 1) = kTwoPi * k;   // sin -> 2 pi k cos
    d(2 * k - 1, 2 * k) = -kTwoPi * k;  // cos -> -2 pi k sin
  }
  return d;
}

std::vector<double> error_matrix(const OmegaMatrix& omega) {
  const int N = omega.N;
  const int m = 2 * N;
  const OmegaMatrix d = exact_derivative_matrix(N);
  std::vector<double> e(static_cast<std::size_t>(m) * m);
  for (int row = 1; row <= m; ++row)
    for (int col = 1; col <= m; ++col) {
      const int k = (col + 1) / 2;
      e[(row - 1) * m + (col - 1)] = std::abs(omega(row, col) - d(row, col)) / (kTwoPi * k);
    }
  return e;
}

ComplexForm complex_form(const OmegaMatrix& omega) {
  const int N = omega.N;
  ComplexForm cf;
  cf.N = N;
  cf.omega_c.resize(static_cast<std::size_t>(N) * N);
  // T maps e^{2 pi i k x} to (i sin_k + cos_k)/sqrt(2); Omega_C = T^H Omega T.
  for (int l = 1; l <= N; ++l)
    for (int k = 1; k <= N; ++k) {
      const double ss = omega(2 * l - 1, 2 * k - 1), sc = omega(2 * l - 1, 2 * k);
      const double cs = omega(2 * l, 2 * k - 1), cc = omega(2 * l, 2 * k);
      cf.omega_c[(l - 1) * N + (k - 1)] = {0.5 * (ss + cc), 0.5 * (cs - sc)};
    }
  for (int k = 1; k <= N; ++k) {
    const auto diag = cf(k, k);
    cf.abscissa.push_back(std::numbers::pi * k / N);
    cf.diffusion.push_back(diag.real());
    cf.dispersion.push_back(diag.imag() - kTwoPi * k);
  }
  return cf;
}

std::vector<double> distortion(const ComplexForm& cf) {
  const int N = cf.N;
  std::vector<double> delta(N, 0.0);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int l = 1; l <= N; ++l)
      if (l != k) s += std::abs(cf(l, k));
    delta[k - 1] = s / N;
  }
  return delta;
}

Temperature temperature(const ComplexForm& cf) {
  const int N = cf.N;
  const double n3 = static_cast<double>(N) * N * N;
  Temperature t;
  t.mode.resize(N);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int l = 1; l <= N; ++l) {
      const double dist = (k - l) / std::numbers::pi;
      s += std::abs(cf(l, k)) * dist * dist;
    }
    t.mode[k - 1] = s / n3;
  }
  double acc = 0.0;
  for (int j = 1; j <= N; ++j) {
    acc += t.mode[j - 1];
    t.running.push_back(acc / j);
  }
  t.scheme = N >= 2 ? t.running[N / 2 - 1] : t.running[0];
  return t;
}

SpectralSignature spectral_signature(const DerivativeOperator& op, int N) {
  SpectralSignature sig;
  sig.omega = build_omega(op, N);
  sig.complex = complex_form(sig.omega);
  sig.delta = distortion(sig.complex);
  sig.temp = temperature(sig.complex);
  return sig;
}

}  // namespace wenolab
