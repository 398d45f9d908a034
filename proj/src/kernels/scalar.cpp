#include "fpq/kernels.hpp"

namespace fpq::kernels {

void shifted_matvec_scalar(const double* a, std::size_t n, double shift, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc + shift * x[i];
  }
}

void ratio_bounds_scalar(const double* y, const double* x, std::size_t n, double& lo, double& hi) {
  lo = y[0] / x[0];
  hi = lo;
  for (std::size_t i = 1; i < n; ++i) {
    const double r = y[i] / x[i];
    if (r < lo) lo = r;
    if (r > hi) hi = r;
  }
}

}  // namespace fpq::kernels
