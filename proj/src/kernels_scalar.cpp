#include "kernel_body.hpp"

namespace wenolab::detail {

void run_scalar(const KernelPlan& plan, const WindowView& in, double eps, double* out, std::size_t begin,
                std::size_t end) {
  dispatch_r<double, 1>(plan, in, eps, out, begin, end);
}

}  // namespace wenolab::detail
