#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "fpq/error.hpp"
#include "fpq/kernels.hpp"
#include "fpq/spectral.hpp"
#include "support/oracles.hpp"

using namespace fpq;
using namespace fpq::spectral;

namespace {

NonnegIntMatrix random_matrix(std::size_t n, unsigned max, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  NonnegIntMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (u(rng) < density) a.set(r, c, BigInt(static_cast<long>(rng() % (max + 1))));
  return a;
}

}  // namespace

TEST_CASE("small exact cases") {
  CHECK(spectral_radius(NonnegIntMatrix(0)) == 0);
  CHECK(spectral_radius(NonnegIntMatrix::identity(4)) == doctest::Approx(1));
  CHECK(spectral_radius(NonnegIntMatrix::all_ones(7)) == doctest::Approx(7).epsilon(1e-12));
  NonnegIntMatrix nil(3);
  nil.set(0, 1, 5);
  nil.set(1, 2, 5);
  CHECK(spectral_radius(nil) == 0);
  CHECK(spectral_radius(NonnegIntMatrix(2, {1, 1, 1, 0})) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-10));
  CHECK_THROWS_AS(NonnegIntMatrix(2).set(0, 0, -1), Error);
}

TEST_CASE("radius agrees with dense eigenvalues") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const auto a = random_matrix(n, 4, 0.5, rng);
    const double want = oracle::spectral_radius(a);
    // Dense eigenvalues of defective matrices are only accurate to about
    // sqrt(machine epsilon), hence the loose absolute slack.
    CHECK(std::fabs(spectral_radius(a) - want) <= 1e-6 * std::max(1.0, want));
    CHECK(spectral_radius(a) <= gershgorin_bound(a) + 1e-9);
  }
}

TEST_CASE("permutation invariance") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 6;
    const auto a = random_matrix(n, 3, 0.4, rng);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(spectral_radius(a.permuted(perm)) == doctest::Approx(spectral_radius(a)).epsilon(1e-9));
  }
}

TEST_CASE("triangular matrices have rho = max diagonal") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 7;
    NonnegIntMatrix a(n);
    long best = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        const long v = static_cast<long>(rng() % 5);
        a.set(r, c, v);
        if (r == c) best = std::max(best, v);
      }
    CHECK(spectral_radius(a) == doctest::Approx(static_cast<double>(best)));
  }
}

TEST_CASE("powers and products") {
  std::mt19937_64 rng(12);
  const auto a = random_matrix(4, 2, 0.7, rng);
  CHECK(a.power(3) == a * a * a);
  CHECK(a.power(0) == NonnegIntMatrix::identity(4));
  // rho(A^k) = rho(A)^k
  CHECK(spectral_radius(a.power(3)) == doctest::Approx(std::pow(spectral_radius(a), 3)).epsilon(1e-8));
}

TEST_CASE("strong components") {
  NonnegIntMatrix a(4);
  a.set(0, 1, 1);
  a.set(1, 0, 1);
  a.set(1, 2, 1);
  a.set(3, 3, 2);
  const auto comps = strong_components(a);
  CHECK(comps == std::vector<std::vector<std::size_t>>{{0, 1}, {2}, {3}});
  CHECK(spectral_radius(a) == doctest::Approx(2));
}

TEST_CASE("gamma matrices") {
  for (std::size_t n = 1; n <= 50; ++n) {
    const auto g = gamma_matrix(n);
    CHECK(std::fabs(spectral_radius(g) - gamma_radius_closed(n)) <= 1e-9);
    CHECK(gamma_radius_closed(n) == doctest::Approx(oracle::spectral_radius(g)).epsilon(1e-10));
  }
}

TEST_CASE("bracket tightens around the radius") {
  const auto b = irreducible_bracket(NonnegIntMatrix::all_ones(3), 1e-12);
  CHECK(b.lower <= 3 + 1e-9);
  CHECK(b.upper >= 3 - 1e-9);
  CHECK(b.upper - b.lower <= 1e-9);
  NonnegIntMatrix cyc(2, {0, 1, 1, 0});
  CHECK(spectral_radius(cyc) == doctest::Approx(1));
}

TEST_CASE("scalar and AVX2 kernels agree") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.1, 3);
  for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 13u, 32u, 37u}) {
    std::vector<double> a(n * n), x(n), y1(n), y2(n);
    for (auto& v : a) v = std::floor(u(rng) * 3);
    for (auto& v : x) v = u(rng);
    kernels::shifted_matvec_scalar(a.data(), n, 1.0, x.data(), y1.data());
    if (!kernels::cpu_has_avx2()) continue;
    kernels::shifted_matvec_avx2(a.data(), n, 1.0, x.data(), y2.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));
    double lo1, hi1, lo2, hi2;
    kernels::ratio_bounds_scalar(y1.data(), x.data(), n, lo1, hi1);
    kernels::ratio_bounds_avx2(y1.data(), x.data(), n, lo2, hi2);
    CHECK(lo1 == lo2);
    CHECK(hi1 == hi2);
  }
  // The radius does not depend on the selected kernel.
  const auto a = NonnegIntMatrix(3, {1, 2, 0, 0, 1, 3, 1, 0, 1});
  kernels::force_isa(kernels::Isa::Scalar);
  const double s = spectral_radius(a);
  kernels::force_isa(kernels::Isa::Avx2);
  const double v = spectral_radius(a);
  CHECK(s == doctest::Approx(v).epsilon(1e-12));
}
