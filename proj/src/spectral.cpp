#include "fpq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "fpq/error.hpp"
#include "fpq/kernels.hpp"

namespace fpq::spectral {

NonnegIntMatrix::NonnegIntMatrix(std::size_t order, std::vector<BigInt> entries)
    : order_(order), entries_(std::move(entries)) {
  if (entries_.size() != order_ * order_) throw Error(ErrorCode::BadShape, "matrix must be square");
  for (const auto& x : entries_)
    if (x < 0) throw Error(ErrorCode::BadShape, "matrix entries must be nonnegative");
}

NonnegIntMatrix NonnegIntMatrix::identity(std::size_t n) {
  NonnegIntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

NonnegIntMatrix NonnegIntMatrix::all_ones(std::size_t n) {
  return NonnegIntMatrix(n, std::vector<BigInt>(n * n, BigInt(1)));
}

void NonnegIntMatrix::set(std::size_t r, std::size_t c, BigInt value) {
  if (value < 0) throw Error(ErrorCode::BadShape, "matrix entries must be nonnegative");
  entries_.at(r * order_ + c) = std::move(value);
}

NonnegIntMatrix NonnegIntMatrix::principal_submatrix(const std::vector<std::size_t>& indices) const {
  NonnegIntMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b)
      sub.entries_[a * indices.size() + b] = (*this)(indices[a], indices[b]);
  return sub;
}

NonnegIntMatrix NonnegIntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  NonnegIntMatrix out(order_);
  for (std::size_t r = 0; r < order_; ++r)
    for (std::size_t c = 0; c < order_; ++c) out.entries_[perm[r] * order_ + perm[c]] = (*this)(r, c);
  return out;
}

NonnegIntMatrix NonnegIntMatrix::power(unsigned exponent) const {
  NonnegIntMatrix result = identity(order_);
  NonnegIntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool NonnegIntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& x) { return x == 0; });
}

NonnegIntMatrix operator*(const NonnegIntMatrix& a, const NonnegIntMatrix& b) {
  if (a.order() != b.order()) throw Error(ErrorCode::BadShape, "order mismatch");
  const std::size_t n = a.order();
  std::vector<BigInt> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) out[i * n + j] += a(i, k) * b(k, j);
    }
  return NonnegIntMatrix(n, std::move(out));
}

NoConvergence::NoConvergence(double lo, double hi)
    : std::runtime_error("power iteration hit its cap; radius in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]"),
      lower(lo),
      upper(hi) {}

std::vector<std::vector<std::size_t>> strong_components(const NonnegIntMatrix& a) {
  const std::size_t n = a.order();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (a(v, w) == 0) continue;
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      components.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == SIZE_MAX) visit(v);
  std::sort(components.begin(), components.end());
  return components;
}

Bracket irreducible_bracket(const NonnegIntMatrix& block, double tol, std::size_t cap) {
  const std::size_t m = block.order();
  std::vector<double> dense(m * m);
  for (std::size_t k = 0; k < m * m; ++k) dense[k] = block.entries()[k].get_d();
  std::vector<double> x(m, 1.0), y(m);
  Bracket br;
  for (std::size_t it = 1; it <= cap; ++it) {
    kernels::shifted_matvec(dense.data(), m, 1.0, x.data(), y.data());
    double lo = 0, hi = 0;
    kernels::ratio_bounds(y.data(), x.data(), m, lo, hi);
    br = {lo - 1.0, hi - 1.0, it};
    if (hi - lo <= tol * std::max(hi - 1.0, 1.0)) return br;
    const double scale = *std::max_element(y.begin(), y.end());
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / scale;
  }
  throw NoConvergence(br.lower, br.upper);
}

double spectral_radius(const NonnegIntMatrix& a, double tol) {
  if (a.order() == 0) return 0.0;
  double best = 0.0;
  for (const auto& comp : strong_components(a)) {
    double rho;
    if (comp.size() == 1) {
      rho = a(comp[0], comp[0]).get_d();
    } else {
      const Bracket br = irreducible_bracket(a.principal_submatrix(comp), tol);
      rho = 0.5 * (br.lower + br.upper);
    }
    best = std::max(best, rho);
  }
  return std::min(best, gershgorin_bound(a));
}

double gershgorin_bound(const NonnegIntMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < a.order(); ++j) row += a(i, j);
    best = std::max(best, row.get_d());
  }
  return best;
}

NonnegIntMatrix gamma_matrix(std::size_t n) {
  NonnegIntMatrix g(n);
  for (std::size_t k = 0; k < n; ++k) {
    g.set(0, k, 1);
    g.set(k, 0, 1);
  }
  return g;
}

double gamma_radius_closed(std::size_t n) { return 0.5 * (1.0 + std::sqrt(4.0 * static_cast<double>(n) - 3.0)); }

}  // namespace fpq::spectral
