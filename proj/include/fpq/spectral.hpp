#pragma once

#include <cstddef>
#include <vector>

#include "fpq/matrix.hpp"

namespace fpq::spectral {

/// Square matrix of nonnegative arbitrary-precision integers.
class NonnegIntMatrix {
 public:
  NonnegIntMatrix() = default;
  explicit NonnegIntMatrix(std::size_t order) : order_(order), entries_(order * order) {}
  NonnegIntMatrix(std::size_t order, std::vector<BigInt> entries);

  static NonnegIntMatrix identity(std::size_t n);
  static NonnegIntMatrix all_ones(std::size_t n);

  std::size_t order() const noexcept { return order_; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }
  /// Throws BadShape on a negative value.
  void set(std::size_t r, std::size_t c, BigInt value);
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  NonnegIntMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;
  /// P^T A P for the permutation sending position k to perm[k].
  NonnegIntMatrix permuted(const std::vector<std::size_t>& perm) const;
  NonnegIntMatrix power(unsigned exponent) const;
  bool is_zero() const;

  friend bool operator==(const NonnegIntMatrix&, const NonnegIntMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<BigInt> entries_;
};

NonnegIntMatrix operator*(const NonnegIntMatrix& a, const NonnegIntMatrix& b);

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kIterationCap = 100000;

/// Thrown when power iteration exhausts its cap; carries the best bracket.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(double lower, double upper);
  double lower;
  double upper;
};

/// Strongly connected components of the support graph (i -> j iff a_ij > 0),
/// each sorted ascending, listed in order of their smallest vertex.
std::vector<std::vector<std::size_t>> strong_components(const NonnegIntMatrix& a);

/// Spectral radius to relative tolerance `tol`: exact on 1x1 blocks, power
/// iteration on B + I for each irreducible diagonal block B otherwise.
double spectral_radius(const NonnegIntMatrix& a, double tol = kDefaultTolerance);

/// Lower and upper Collatz-Wielandt bounds around the radius.
struct Bracket {
  double lower = 0;
  double upper = 0;
  std::size_t iterations = 0;
};

/// Bracket of rho(B) for a single irreducible block of order >= 2.
Bracket irreducible_bracket(const NonnegIntMatrix& block, double tol, std::size_t cap = kIterationCap);

/// max_i (a_ii + sum_{j != i} a_ij).
double gershgorin_bound(const NonnegIntMatrix& a);

/// Ones in the first row and first column, zeros elsewhere.
NonnegIntMatrix gamma_matrix(std::size_t n);

/// (1 + sqrt(4n - 3)) / 2.
double gamma_radius_closed(std::size_t n);

}  // namespace fpq::spectral
