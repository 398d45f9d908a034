#include "fpq/bricks.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "fpq/error.hpp"
#include "fpq/hom.hpp"

namespace fpq::bricks {

std::size_t derived_hom_dim(const Representation& x, int shift_x, const Representation& y, int shift_y) {
  require_same_quiver(x, y);
  if (shift_y == shift_x) return hom_dim(x, y);
  if (shift_y == shift_x + 1) return dim_ext1(x, y);
  return 0;
}

std::size_t derived_hom_dim(const DerivedObject& x, const DerivedObject& y) {
  return derived_hom_dim(x.rep, x.shift, y.rep, y.shift);
}

bool is_brick(const Representation& x) { return hom_dim(x, x) == 1; }
bool is_brick(const DerivedObject& x) { return is_brick(x.rep); }

BrickSetCheck check_brick_set(const std::vector<DerivedObject>& members) {
  const std::size_t n = members.size();
  BrickSetCheck out{true, spectral::NonnegIntMatrix(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t d = derived_hom_dim(members[i], members[j]);
      out.certificate.set(i, j, d);
      if (i == j ? d != 1 : d != 0) out.ok = false;
    }
  return out;
}

bool is_brick_set(const std::vector<DerivedObject>& members) { return check_brick_set(members).ok; }

bool is_connected_brick_set(const std::vector<DerivedObject>& members) {
  if (!is_brick_set(members)) return false;
  for (const auto& x : members)
    for (const auto& y : members)
      if (derived_hom_dim(x.rep, x.shift, y.rep, y.shift + 1) == 0) return false;
  return true;
}

CompatibilityGraph compatibility_graph(const std::vector<DerivedObject>& candidates) {
  CompatibilityGraph g;
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (is_brick(candidates[k])) g.nodes.push_back(k);
  const std::size_t n = g.nodes.size();
  g.adjacent.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto& x = candidates[g.nodes[a]];
      const auto& y = candidates[g.nodes[b]];
      const bool ok = derived_hom_dim(x, y) == 0 && derived_hom_dim(y, x) == 0;
      g.adjacent[a][b] = g.adjacent[b][a] = ok;
    }
  return g;
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += static_cast<std::size_t>(__builtin_popcountll(words_[k] & o.words_[k]));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  template <class F>
  void for_each(std::size_t n, F&& f) const {
    for (std::size_t i = 0; i < n; ++i)
      if (test(i)) f(i);
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct BronKerbosch {
  std::size_t n;
  std::vector<Bits> neighbours;
  std::size_t cap;
  CliqueResult result;
  std::vector<std::size_t> current;

  // Returns false once the cap is exceeded.
  bool run(Bits p, Bits x) {
    if (p.none() && x.none()) {
      if (result.cliques.size() >= cap) {
        result.complete = false;
        return false;
      }
      auto clique = current;
      std::sort(clique.begin(), clique.end());
      result.cliques.push_back(std::move(clique));
      return true;
    }
    std::size_t pivot = SIZE_MAX, best = 0;
    auto consider = [&](std::size_t u) {
      const std::size_t c = p.count_and(neighbours[u]);
      if (pivot == SIZE_MAX || c > best) {
        pivot = u;
        best = c;
      }
    };
    p.for_each(n, consider);
    x.for_each(n, consider);
    std::vector<std::size_t> branch;
    p.for_each(n, [&](std::size_t v) {
      if (!neighbours[pivot].test(v)) branch.push_back(v);
    });
    for (std::size_t v : branch) {
      current.push_back(v);
      const bool go_on = run(p & neighbours[v], x & neighbours[v]);
      current.pop_back();
      if (!go_on) return false;
      p.reset(v);
      x.set(v);
    }
    return true;
  }
};

}  // namespace

CliqueResult maximal_cliques(const std::vector<std::vector<bool>>& adjacent, std::size_t cap) {
  const std::size_t n = adjacent.size();
  if (n == 0) return {};
  BronKerbosch bk{n, std::vector<Bits>(n, Bits(n)), cap, {}, {}};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && adjacent[a][b]) bk.neighbours[a].set(b);
  Bits all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  bk.run(all, Bits(n));
  std::sort(bk.result.cliques.begin(), bk.result.cliques.end());
  return bk.result;
}

MaximalBrickSets maximal_brick_sets(const std::vector<DerivedObject>& candidates, std::size_t cap) {
  const CompatibilityGraph g = compatibility_graph(candidates);
  const CliqueResult cliques = maximal_cliques(g.adjacent, cap);
  MaximalBrickSets out;
  out.complete = cliques.complete;
  for (const auto& clique : cliques.cliques) {
    std::vector<DerivedObject> members;
    for (auto pos : clique) members.push_back(candidates[g.nodes[pos]]);
    auto check = check_brick_set(members);
    out.sets.push_back({std::move(members), std::move(check.certificate)});
  }
  return out;
}

namespace {

bool is_two_arrow_kronecker(const Quiver& q) {
  if (q.vertex_count() != 2 || q.arrow_count() != 2) return false;
  return std::all_of(q.arrows().begin(), q.arrows().end(),
                     [](const Arrow& a) { return a.source == 0 && a.target == 1; });
}

}  // namespace

Representation band_kronecker(const QuiverPtr& q, const Rational& c) {
  if (!is_two_arrow_kronecker(*q))
    throw Error(ErrorCode::WrongQuiver, "band_kronecker needs the quiver 1 => 2 with two arrows");
  RationalMatrix first(1, 1), second(1, 1);
  first(0, 0) = 1;
  second(0, 0) = c;
  return {q, {1, 1}, {first, second}};
}

Representation band_kronecker(const Rational& c) { return band_kronecker(share(kronecker_quiver(2)), c); }

namespace {

struct PathInfo {
  std::vector<std::size_t> arrows;
  std::vector<std::size_t> vertices;  // in traversal order, endpoints included
};

PathInfo resolve_path(const Quiver& q, const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(ErrorCode::BadPaths, "path must contain at least one arrow");
  PathInfo info;
  for (const auto& id : labels) {
    const std::size_t k = q.find_arrow(id);
    if (k == q.arrow_count()) throw Error(ErrorCode::BadPaths, "unknown arrow '" + id + "'");
    const Arrow& a = q.arrow(k);
    if (info.vertices.empty())
      info.vertices.push_back(a.source);
    else if (info.vertices.back() != a.source)
      throw Error(ErrorCode::BadPaths, "arrows do not compose into a path at '" + id + "'");
    info.vertices.push_back(a.target);
    info.arrows.push_back(k);
  }
  return info;
}

}  // namespace

Representation band_two_paths(const QuiverPtr& q, const std::vector<std::string>& p1,
                              const std::vector<std::string>& p2, const Rational& c) {
  const PathInfo a = resolve_path(*q, p1);
  const PathInfo b = resolve_path(*q, p2);
  if (a.vertices.front() != b.vertices.front() || a.vertices.back() != b.vertices.back())
    throw Error(ErrorCode::BadPaths, "paths must share both endpoints");
  std::set<std::size_t> interior(a.vertices.begin() + 1, a.vertices.end() - 1);
  for (std::size_t k = 1; k + 1 < b.vertices.size(); ++k)
    if (interior.count(b.vertices[k])) throw Error(ErrorCode::BadPaths, "paths meet at an interior vertex");
  for (auto k : a.arrows)
    if (std::find(b.arrows.begin(), b.arrows.end(), k) != b.arrows.end())
      throw Error(ErrorCode::BadPaths, "paths share an arrow");

  std::vector<std::size_t> dims(q->vertex_count(), 0);
  for (auto v : a.vertices) dims[v] = 1;
  for (auto v : b.vertices) dims[v] = 1;
  std::vector<RationalMatrix> maps;
  for (const auto& arrow : q->arrows()) maps.emplace_back(dims[arrow.target], dims[arrow.source]);
  for (auto k : a.arrows) maps[k](0, 0) = 1;
  for (auto k : b.arrows) maps[k](0, 0) = 1;
  maps[b.arrows.front()](0, 0) = c;
  return {q, std::move(dims), std::move(maps)};
}

BrickFamily kronecker_band_family(const QuiverPtr& q) {
  if (!is_two_arrow_kronecker(*q))
    throw Error(ErrorCode::WrongQuiver, "Kronecker band family needs the quiver 1 => 2 with two arrows");
  return {"kronecker-band", [q](std::size_t k) {
            std::vector<DerivedObject> out;
            for (std::size_t c = 1; c <= k; ++c)
              out.push_back({band_kronecker(q, Rational(static_cast<long>(c))), 0, "M_" + std::to_string(c)});
            return out;
          }};
}

BrickFamily two_path_band_family(const QuiverPtr& q, std::vector<std::string> p1, std::vector<std::string> p2) {
  band_two_paths(q, p1, p2, 1);  // validates the paths up front
  return {"two-path-band", [q, p1 = std::move(p1), p2 = std::move(p2)](std::size_t k) {
            std::vector<DerivedObject> out;
            for (std::size_t c = 1; c <= k; ++c)
              out.push_back({band_two_paths(q, p1, p2, Rational(static_cast<long>(c))), 0, "M_" + std::to_string(c)});
            return out;
          }};
}

}  // namespace fpq::bricks
