#include "fpq/linalg.hpp"

#include <utility>

#include "fpq/error.hpp"

namespace fpq::linalg {

namespace {

// Scales a rational row to a primitive-free integer row with the same span.
std::vector<BigInt> integer_row(const RationalMatrix& m, std::size_t r) {
  BigInt lcm = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const BigInt& d = m(r, c).get_den();
    if (d != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& x = m(r, c);
    if (sgn(x) == 0) continue;
    row[c] = x.get_num() * (lcm / x.get_den());
  }
  return row;
}

// Gauss-Jordan over Q on a copy; returns reduced matrix and pivot columns.
std::pair<RationalMatrix, std::vector<std::size_t>> reduce(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Echelon echelon(const RationalMatrix& m) {
  Echelon e;
  e.cols = m.cols();
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = integer_row(m, r);
    bool nonzero = false;
    for (const auto& x : row) nonzero = nonzero || x != 0;
    if (nonzero) rows.push_back(std::move(row));
  }
  BigInt prev = 1;
  std::size_t r = 0;
  const std::size_t n_rows = rows.size();
  for (std::size_t c = 0; c < m.cols() && r < n_rows; ++c) {
    std::size_t p = r;
    while (p < n_rows && rows[p][c] == 0) ++p;
    if (p == n_rows) continue;
    std::swap(rows[p], rows[r]);
    const BigInt& pivot = rows[r][c];
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      const BigInt factor = rows[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        BigInt v = pivot * rows[i][j] - factor * rows[r][j];
        if (prev != 1) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    e.pivot_columns.push_back(c);
    ++r;
  }
  e.rank = r;
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

std::size_t rank(const RationalMatrix& m) { return echelon(m).rank; }

RationalMatrix nullspace(const RationalMatrix& m) {
  const Echelon e = echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::vector<Rational> x(n);
    x[free_cols[k]] = 1;
    for (std::size_t pr = e.rank; pr-- > 0;) {
      const std::size_t pc = e.pivot_columns[pr];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (e.rows[pr][j] != 0 && sgn(x[j]) != 0) acc += Rational(e.rows[pr][j]) * x[j];
      x[pc] = -acc / Rational(e.rows[pr][pc]);
    }
    for (std::size_t r = 0; r < n; ++r) basis(r, k) = x[r];
  }
  return basis;
}

std::vector<std::size_t> column_basis(const RationalMatrix& m) { return echelon(m).pivot_columns; }

RationalMatrix select_columns(const RationalMatrix& m, const std::vector<std::size_t>& indices) {
  RationalMatrix out(m.rows(), indices.size());
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, indices[k]);
  return out;
}

RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::BadShape, "hconcat row mismatch");
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

std::optional<RationalMatrix> solve_full_column_rank(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::BadShape, "solve row mismatch");
  auto [red, pivots] = reduce(hconcat(a, b));
  if (pivots.size() != a.cols()) return std::nullopt;
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] != k) return std::nullopt;
  // Rows below the pivots must vanish on the b-part.
  for (std::size_t r = a.cols(); r < red.rows(); ++r)
    for (std::size_t c = a.cols(); c < red.cols(); ++c)
      if (sgn(red(r, c)) != 0) return std::nullopt;
  RationalMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = red(r, a.cols() + c);
  return x;
}

bool is_invertible(const RationalMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  return solve_full_column_rank(m, RationalMatrix::identity(m.rows()));
}

}  // namespace fpq::linalg
