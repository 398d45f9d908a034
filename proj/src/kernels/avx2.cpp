#include "fpq/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define FPQ_X86 1
#else
#define FPQ_X86 0
#endif

namespace fpq::kernels {

#if FPQ_X86

__attribute__((target("avx2"))) void shifted_matvec_avx2(const double* a, std::size_t n, double shift,
                                                         const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a + i * n;
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(row + j), _mm256_loadu_pd(x + j)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; j < n; ++j) sum += row[j] * x[j];
    y[i] = sum + shift * x[i];
  }
}

__attribute__((target("avx2"))) void ratio_bounds_avx2(const double* y, const double* x, std::size_t n, double& lo,
                                                       double& hi) {
  std::size_t i = 0;
  double l = y[0] / x[0];
  double h = l;
  if (n >= 4) {
    __m256d vlo = _mm256_div_pd(_mm256_loadu_pd(y), _mm256_loadu_pd(x));
    __m256d vhi = vlo;
    for (i = 4; i + 4 <= n; i += 4) {
      const __m256d r = _mm256_div_pd(_mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i));
      vlo = _mm256_min_pd(vlo, r);
      vhi = _mm256_max_pd(vhi, r);
    }
    alignas(32) double a[4], b[4];
    _mm256_store_pd(a, vlo);
    _mm256_store_pd(b, vhi);
    l = a[0];
    h = b[0];
    for (int k = 1; k < 4; ++k) {
      if (a[k] < l) l = a[k];
      if (b[k] > h) h = b[k];
    }
  }
  for (; i < n; ++i) {
    const double r = y[i] / x[i];
    if (r < l) l = r;
    if (r > h) h = r;
  }
  lo = l;
  hi = h;
}

bool cpu_has_avx2() noexcept { return __builtin_cpu_supports("avx2"); }

#else

void shifted_matvec_avx2(const double* a, std::size_t n, double shift, const double* x, double* y) {
  shifted_matvec_scalar(a, n, shift, x, y);
}

void ratio_bounds_avx2(const double* y, const double* x, std::size_t n, double& lo, double& hi) {
  ratio_bounds_scalar(y, x, n, lo, hi);
}

bool cpu_has_avx2() noexcept { return false; }

#endif

}  // namespace fpq::kernels
