#pragma once

// Slow, independent reference computations for the tests. Nothing here calls
// the library's linear algebra, clique search, spectral code or axiom checker.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpq/representation.hpp"
#include "fpq/spectral.hpp"
#include "fpq/wba.hpp"

namespace oracle {

using fpq::Rational;
using Rows = std::vector<std::vector<Rational>>;

// Plain Gauss-Jordan; rows may be ragged-free only.
inline std::size_t rank(Rows a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k == r || a[k][c] == 0) continue;
      const Rational f = a[k][c] / a[r][c];
      for (std::size_t x = c; x < cols; ++x) a[k][x] -= f * a[r][x];
    }
    ++r;
  }
  return r;
}

// The linear map (f_v) -> (f_t M_a - N_a f_s) as rows indexed by arrow entries
// and columns by vertex-map entries.
struct HomSystem {
  Rows rows;
  std::size_t unknowns = 0;
};

inline HomSystem hom_system(const fpq::Representation& m, const fpq::Representation& n) {
  const auto& q = m.quiver();
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  HomSystem s;
  s.unknowns = offset.back();
  // f_v is dim N_v x dim M_v; entry (r, c) is variable offset[v] + r * dim M_v + c.
  auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * m.dim(v) + c; };
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const auto& a = q.arrow(k);
    const auto& ma = m.map(k);
    const auto& na = n.map(k);
    for (std::size_t r = 0; r < n.dim(a.target); ++r) {
      for (std::size_t c = 0; c < m.dim(a.source); ++c) {
        std::vector<Rational> row(s.unknowns, Rational(0));
        // (f_t M_a)_{rc} = sum_x f_t(r, x) M_a(x, c)
        for (std::size_t x = 0; x < m.dim(a.target); ++x) row[var(a.target, r, x)] += ma(x, c);
        // (N_a f_s)_{rc} = sum_y N_a(r, y) f_s(y, c)
        for (std::size_t y = 0; y < n.dim(a.source); ++y) row[var(a.source, y, c)] -= na(r, y);
        s.rows.push_back(std::move(row));
      }
    }
  }
  return s;
}

inline std::size_t hom_dim(const fpq::Representation& m, const fpq::Representation& n) {
  const auto s = hom_system(m, n);
  return s.unknowns - rank(s.rows);
}

// Cokernel of the same map: Ext^1 from the standard resolution.
inline std::size_t ext1(const fpq::Representation& m, const fpq::Representation& n) {
  const auto s = hom_system(m, n);
  return s.rows.size() - rank(s.rows);
}

inline std::size_t derived(const fpq::Representation& x, int sx, const fpq::Representation& y, int sy) {
  if (sx == sy) return oracle::hom_dim(x, y);
  if (sy == sx + 1) return oracle::ext1(x, y);
  return 0;
}

// The type A closed form straight from the orientation string ('>' is i -> i+1).
inline std::size_t closed_form(const std::string& word, std::size_t i, std::size_t j, int shift) {
  const std::size_t n = word.size() + 1;
  const char left = i == 1 ? '?' : word[i - 2];
  const char right = j == n ? '?' : word[j - 1];
  const bool sink = (i == 1 || left == '>') && (j == n || right == '<');
  const bool source = (i == 1 || left == '<') && (j == n || right == '>');
  if (shift == 0) return sink ? 1 : source ? std::min(i, n - j + 1) : 1;
  if (shift == 1) return sink ? std::min(i - 1, n - j) : 0;
  return 0;
}

// Maximal subsets that are brick sets, by trying every subset.
inline std::vector<std::vector<std::size_t>> maximal_brick_subsets(const std::vector<fpq::Representation>& objs,
                                                                   const std::vector<int>& shifts) {
  const std::size_t n = objs.size();
  std::vector<bool> ok(std::size_t{1} << n, false);
  for (std::size_t mask = 1; mask < ok.size(); ++mask) {
    bool good = true;
    for (std::size_t a = 0; a < n && good; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < n && good; ++b) {
        if (!(mask >> b & 1)) continue;
        const auto d = derived(objs[a], shifts[a], objs[b], shifts[b]);
        good = a == b ? d == 1 : d == 0;
      }
    }
    ok[mask] = good;
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < ok.size(); ++mask) {
    if (!ok[mask]) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < n; ++b)
      if (!(mask >> b & 1) && ok[mask | std::size_t{1} << b]) maximal = false;
    if (!maximal) continue;
    std::vector<std::size_t> set;
    for (std::size_t b = 0; b < n; ++b)
      if (mask >> b & 1) set.push_back(b);
    out.push_back(set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double spectral_radius(const fpq::spectral::NonnegIntMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.order());
  if (n == 0) return 0;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = a(r, c).get_d();
  const Eigen::VectorXcd ev = m.eigenvalues();
  double best = 0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) best = std::max(best, std::abs(ev[k]));
  return best;
}

// Weak bialgebra axioms on the full basis, with path products recomputed from
// the arrow sequences.
class DenseWba {
 public:
  explicit DenseWba(const fpq::wba::CoproductSpec& s) : s_(s), b_(*s.basis) {
    for (std::size_t k = 0; k < b_.size(); ++k) index_[key(b_.path(k))] = k;
    for (std::size_t k = 0; k < b_.size(); ++k) delta_.push_back(delta_path(k));
  }

  std::string first_failure() const {
    const std::size_t n = b_.size();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto p = product(x, y);
        T2 rhs = mul2(delta_[x], delta_[y]);
        T2 lhs = p ? delta_[*p] : T2{};
        if (!equal(lhs, rhs)) return "multiplicativity";
      }
    for (std::size_t x = 0; x < n; ++x) {
      T3 l, r;
      for (const auto& [k, c] : delta_[x]) {
        for (const auto& [k2, c2] : delta_[k[0]]) add(l, A3{k2[0], k2[1], k[1]}, c * c2);
        for (const auto& [k2, c2] : delta_[k[1]]) add(r, A3{k[0], k2[0], k2[1]}, c * c2);
      }
      if (!equal(l, r)) return "coassociativity";
    }
    for (std::size_t x = 0; x < n; ++x) {
      std::map<std::size_t, Rational> l, r;
      for (const auto& [k, c] : delta_[x]) {
        l[k[1]] += c * s_.counit[k[0]];
        r[k[0]] += c * s_.counit[k[1]];
      }
      std::map<std::size_t, Rational> want{{x, Rational(1)}};
      if (!equal(l, want)) return "counit-left";
      if (!equal(r, want)) return "counit-right";
    }
    // Delta^2(1) against (Delta(1) (x) 1)(1 (x) Delta(1)) and the mirror.
    T2 one;
    for (std::size_t v = 0; v < b_.vertex_count(); ++v)
      for (const auto& [k, c] : delta_[v]) add(one, k, c);
    T3 d2, left, right;
    for (const auto& [k, c] : one)
      for (const auto& [k2, c2] : delta_[k[1]]) add(d2, A3{k[0], k2[0], k2[1]}, c * c2);
    for (const auto& [p, c] : one)
      for (const auto& [q, c2] : one) {
        // (p0 (x) p1 (x) 1)(1 (x) q0 (x) q1) = p0 (x) p1 q0 (x) q1
        if (auto m = product(p[1], q[0])) add(left, A3{p[0], *m, q[1]}, c * c2);
        // (1 (x) p0 (x) p1)(q0 (x) q1 (x) 1) = q0 (x) p0 q1 (x) p1
        if (auto m = product(p[0], q[1])) add(right, A3{q[0], *m, p[1]}, c * c2);
      }
    if (!equal(d2, left) || !equal(d2, right)) return "weak-unit";
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const auto xy = product(x, y);
          const auto xyz = xy ? product(*xy, z) : std::nullopt;
          const Rational want = xyz ? s_.counit[*xyz] : Rational(0);
          Rational l = 0, r = 0;
          for (const auto& [k, c] : delta_[y]) {
            l += c * eps(x, k[0]) * eps(k[1], z);
            r += c * eps(x, k[1]) * eps(k[0], z);
          }
          if (l != want || r != want) return "weak-counit";
        }
    return "";
  }

 private:
  using T2 = std::map<std::array<std::size_t, 2>, Rational>;
  using T3 = std::map<std::array<std::size_t, 3>, Rational>;
  using A3 = std::array<std::size_t, 3>;

  static std::vector<std::size_t> key(const fpq::wba::Path& p) {
    std::vector<std::size_t> k{p.source, p.target};
    k.insert(k.end(), p.arrows.begin(), p.arrows.end());
    return k;
  }

  // x * y = "y, then x".
  std::optional<std::size_t> product(std::size_t x, std::size_t y) const {
    const auto& px = b_.path(x);
    const auto& py = b_.path(y);
    if (py.target != px.source) return std::nullopt;
    fpq::wba::Path r{py.source, px.target, py.arrows};
    r.arrows.insert(r.arrows.end(), px.arrows.begin(), px.arrows.end());
    auto it = index_.find(key(r));
    return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
  }

  Rational eps(std::size_t x, std::size_t y) const {
    const auto p = product(x, y);
    return p ? s_.counit[*p] : Rational(0);
  }

  template <class M, class K>
  static void add(M& m, const K& k, const Rational& c) {
    if (c == 0) return;
    auto& v = m[k];
    v += c;
    if (v == 0) m.erase(k);
  }

  template <class M>
  static bool equal(const M& a, const M& b) {
    auto clean = [](const M& m) {
      M out;
      for (const auto& [k, v] : m)
        if (v != 0) out[k] = v;
      return out;
    };
    return clean(a) == clean(b);
  }

  T2 mul2(const T2& a, const T2& b) const {
    T2 out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        const auto l = product(ka[0], kb[0]);
        const auto r = product(ka[1], kb[1]);
        if (l && r) add(out, std::array<std::size_t, 2>{*l, *r}, ca * cb);
      }
    return out;
  }

  T2 generator(std::size_t g) const {
    T2 out;
    for (const auto& [k, c] : s_.delta[g]) add(out, std::array<std::size_t, 2>{k.first, k.second}, c);
    return out;
  }

  T2 delta_path(std::size_t k) const {
    const auto& p = b_.path(k);
    if (p.trivial()) return generator(p.source);
    // Path a1 then a2 ... is a_last * ... * a1.
    T2 acc = generator(b_.vertex_count() + p.arrows.front());
    for (std::size_t i = 1; i < p.arrows.size(); ++i) acc = mul2(generator(b_.vertex_count() + p.arrows[i]), acc);
    return acc;
  }

  const fpq::wba::CoproductSpec& s_;
  const fpq::wba::PathAlgebraBasis& b_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  std::vector<T2> delta_;
};

inline std::string wba_first_failure(const fpq::wba::CoproductSpec& s) { return DenseWba(s).first_failure(); }

}  // namespace oracle
