#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace fpq {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws Error(ParseError).
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

/// Dense row-major matrix over exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const noexcept { return data_; }

  bool is_zero() const;
  RationalMatrix transpose() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix scaled(const RationalMatrix& a, const Rational& factor);

/// Kronecker product; the row/column index of `left` varies slowest.
RationalMatrix kron(const RationalMatrix& left, const RationalMatrix& right);

/// Block-diagonal sum diag(a, b).
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace fpq
