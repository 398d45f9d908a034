#pragma once

#include <optional>
#include <vector>

#include "fpq/matrix.hpp"

namespace fpq::linalg {

/// Row echelon data from fraction-free (Bareiss) elimination. Pivots are
/// chosen as the first nonzero entry in column order, rows scanned top-down.
struct Echelon {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  /// Integer echelon form, rows [0, rank) meaningful.
  std::vector<std::vector<BigInt>> rows;
  std::size_t cols = 0;
};

Echelon echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of { x : m x = 0 }, one vector per free column, returned as columns
/// of a cols x (cols - rank) matrix. The free variable of each basis vector is
/// set to 1.
RationalMatrix nullspace(const RationalMatrix& m);

/// Indices of columns of m forming a basis of its column space (the pivot
/// columns of the echelon form).
std::vector<std::size_t> column_basis(const RationalMatrix& m);

/// Columns `indices` of m as a new matrix.
RationalMatrix select_columns(const RationalMatrix& m, const std::vector<std::size_t>& indices);

/// Horizontal concatenation [a | b]; rows must agree.
RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);

/// Exact solution X of a X = b when a has full column rank and b lies in the
/// column space of a; nullopt otherwise.
std::optional<RationalMatrix> solve_full_column_rank(const RationalMatrix& a, const RationalMatrix& b);

bool is_invertible(const RationalMatrix& m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace fpq::linalg
