#include "fpq/matrix.hpp"

#include <cctype>

#include "fpq/error.hpp"

namespace fpq {

namespace {

bool valid_integer_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
  BigInt n(num.front() == '+' ? num.substr(1) : num, 10);
  BigInt d(den, 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorCode::BadShape, "entry count does not match " + std::to_string(rows_) + "x" +
                                         std::to_string(cols_));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::BadShape, "matrix product shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::BadShape, "matrix sum shape mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  return a + scaled(b, Rational(-1));
}

RationalMatrix scaled(const RationalMatrix& a, const Rational& factor) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) * factor;
  return out;
}

RationalMatrix kron(const RationalMatrix& left, const RationalMatrix& right) {
  RationalMatrix out(left.rows() * right.rows(), left.cols() * right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i)
    for (std::size_t j = 0; j < left.cols(); ++j) {
      const Rational& lij = left(i, j);
      if (sgn(lij) == 0) continue;
      for (std::size_t k = 0; k < right.rows(); ++k)
        for (std::size_t l = 0; l < right.cols(); ++l)
          if (sgn(right(k, l)) != 0) out(i * right.rows() + k, j * right.cols() + l) = lij * right(k, l);
    }
  return out;
}

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

}  // namespace fpq
