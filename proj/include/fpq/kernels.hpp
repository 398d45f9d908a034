#pragma once

// Dense double kernels used by the power iteration. A scalar reference and an
// AVX2 variant exist; the active one is chosen once from the CPU features and
// can be overridden with FPQ_SIMD=scalar|avx2.

#include <cstddef>
#include <string_view>

namespace fpq::kernels {

enum class Isa { Scalar, Avx2 };

/// y = (A + shift * I) x for a row-major n x n matrix `a`.
void shifted_matvec_scalar(const double* a, std::size_t n, double shift, const double* x, double* y);
void shifted_matvec_avx2(const double* a, std::size_t n, double shift, const double* x, double* y);

/// min and max of y_i / x_i over i (x strictly positive).
void ratio_bounds_scalar(const double* y, const double* x, std::size_t n, double& lo, double& hi);
void ratio_bounds_avx2(const double* y, const double* x, std::size_t n, double& lo, double& hi);

bool cpu_has_avx2() noexcept;

/// Selected ISA (cached after the first call).
Isa active_isa() noexcept;
/// Forces an ISA; Avx2 falls back to Scalar when unsupported. For tests.
void force_isa(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

void shifted_matvec(const double* a, std::size_t n, double shift, const double* x, double* y);
void ratio_bounds(const double* y, const double* x, std::size_t n, double& lo, double& hi);

}  // namespace fpq::kernels
