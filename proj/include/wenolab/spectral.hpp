#pragma once

// Fourier-space signature of (possibly nonlinear) discrete derivative
// operators on the periodic unit interval split into 2N+1 cells.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "wenolab/recon.hpp"

namespace wenolab {

/// Maps periodic cell averages (cell width 1/size on [0,1)) to approximate
/// cell averages of the x-derivative.
using DerivativeOperator = std::function<void(std::span<const double>, std::span<double>)>;

/// (u^-_{j+1/2} - u^-_{j-1/2}) / h with the left-biased reconstructed value (unit positive speed).
DerivativeOperator upwind_fv_derivative(const ReconScheme& scheme);
/// Same flux form with the linear P_opt boundary value; a linear scheme of order 2r-1.
DerivativeOperator linear_upwind_derivative(int r);
DerivativeOperator first_order_upwind();
/// Second-order (u_{j+1} - u_{j-1}) / 2h.
DerivativeOperator central_difference();
/// Exact derivative of the trigonometric interpolant of the averages (odd cell counts only).
DerivativeOperator exact_spectral_derivative();

/// Real-basis matrix of an operator, (2N+1)^2 row-major. Column = input mode,
/// row = output mode; index 0 is the constant mode, 2k-1 is sin(2 pi k x) and
/// 2k is cos(2 pi k x).
struct OmegaMatrix {
  int N = 0;
  std::vector<double> data;

  int size() const { return 2 * N + 1; }
  double operator()(int row, int col) const { return data[static_cast<std::size_t>(row) * size() + col]; }
  double& operator()(int row, int col) { return data[static_cast<std::size_t>(row) * size() + col]; }
};

/// Exact cell averages of sin(2 pi k x) (sine = true) or cos(2 pi k x) on 2N+1 cells.
std::vector<double> mode_averages(int N, int k, bool sine);
/// Coefficients of `values` in the basis of cell-averaged Fourier modes, indexed as in OmegaMatrix.
std::vector<double> project_averaged_modes(std::span<const double> values, int N);

OmegaMatrix build_omega(const DerivativeOperator& op, int N);
/// Matrix of the exact derivative in the same layout.
OmegaMatrix exact_derivative_matrix(int N);

/// Relative error |Omega - D| with column k scaled by 1/(2 pi k); 2N*2N row-major,
/// constant row and column dropped.
std::vector<double> error_matrix(const OmegaMatrix& omega);

struct ComplexForm {
  int N = 0;
  /// N*N row-major: entry [(l-1)*N + (k-1)] is the coefficient of mode l produced by mode k.
  std::vector<std::complex<double>> omega_c;
  std::vector<double> abscissa;    // pi k / N
  std::vector<double> diffusion;   // Re of the diagonal
  std::vector<double> dispersion;  // Im of the diagonal minus 2 pi k

  std::complex<double> operator()(int l, int k) const {
    return omega_c[static_cast<std::size_t>(l - 1) * N + (k - 1)];
  }
};

ComplexForm complex_form(const OmegaMatrix& omega);

/// delta_k = (1/N) sum_{l != k} |(Omega_C)_{lk}|.
std::vector<double> distortion(const ComplexForm& cf);

struct Temperature {
  std::vector<double> mode;     // T_k
  std::vector<double> running;  // mean of T_1..T_j
  double scheme = 0.0;          // running value at j = N/2
};

Temperature temperature(const ComplexForm& cf);

struct SpectralSignature {
  OmegaMatrix omega;
  ComplexForm complex;
  std::vector<double> delta;
  Temperature temp;
};

SpectralSignature spectral_signature(const DerivativeOperator& op, int N);

}  // namespace wenolab
