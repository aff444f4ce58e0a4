#pragma once

// Batched reconstruction over many cells. A scalar reference kernel and an
// AVX2 kernel share one templated body; the variant is picked at runtime.

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "wenolab/recon.hpp"

namespace wenolab {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);
bool isa_available(Isa isa);
/// Best available variant, unless overridden by set_isa() or WENOLAB_ISA=scalar|avx2.
Isa active_isa();
/// Throws std::invalid_argument if the variant is not compiled in or unsupported by the CPU.
void set_isa(Isa isa);

/// Strided view of reconstruction windows: element m of the window of cell j
/// is first[j * cell_stride + m], for m = 0..2r-2 (window centred on cell j).
struct WindowView {
  const double* first = nullptr;
  std::ptrdiff_t cell_stride = 1;
  std::size_t cells = 0;
};

namespace detail {
struct KernelPlan;
}

class ReconKernel {
 public:
  /// `nodes` are reconstruction points in local units xi in [-1/2, 1/2].
  /// WENO supports only the cell boundaries xi = +-1/2.
  ReconKernel(const ReconScheme& scheme, std::vector<double> nodes);
  ~ReconKernel();
  ReconKernel(ReconKernel&&) noexcept;
  ReconKernel& operator=(ReconKernel&&) noexcept;

  const ReconScheme& scheme() const { return scheme_; }
  std::span<const double> nodes() const { return nodes_; }

  /// out[n * in.cells + j] = reconstruction of cell j at node n.
  void run(WindowView in, double h, std::span<double> out) const { run(in, h, out, active_isa()); }
  void run(WindowView in, double h, std::span<double> out, Isa isa) const;

 private:
  ReconScheme scheme_;
  std::vector<double> nodes_;
  std::unique_ptr<detail::KernelPlan> plan_;
};

}  // namespace wenolab
