#include <atomic>
#include <cstdlib>
#include <string_view>

#include "fpq/kernels.hpp"

namespace fpq::kernels {

namespace {

Isa detect() noexcept {
  if (const char* forced = std::getenv("FPQ_SIMD")) {
    if (std::string_view(forced) == "scalar") return Isa::Scalar;
  }
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<int>& slot() noexcept {
  static std::atomic<int> isa{static_cast<int>(detect())};
  return isa;
}

}  // namespace

Isa active_isa() noexcept { return static_cast<Isa>(slot().load(std::memory_order_relaxed)); }

void force_isa(Isa isa) noexcept {
  if (isa == Isa::Avx2 && !cpu_has_avx2()) isa = Isa::Scalar;
  slot().store(static_cast<int>(isa), std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void shifted_matvec(const double* a, std::size_t n, double shift, const double* x, double* y) {
  if (active_isa() == Isa::Avx2)
    shifted_matvec_avx2(a, n, shift, x, y);
  else
    shifted_matvec_scalar(a, n, shift, x, y);
}

void ratio_bounds(const double* y, const double* x, std::size_t n, double& lo, double& hi) {
  if (active_isa() == Isa::Avx2)
    ratio_bounds_avx2(y, x, n, lo, hi);
  else
    ratio_bounds_scalar(y, x, n, lo, hi);
}

}  // namespace fpq::kernels
