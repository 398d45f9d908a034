#include "fpq/wba.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "fpq/error.hpp"
#include "fpq/hom.hpp"
#include "fpq/linalg.hpp"

namespace fpq::wba {

// ---------------------------------------------------------------------------
// Path basis

PathAlgebraBasis::PathAlgebraBasis(QuiverPtr q) : quiver_(std::move(q)) {
  const Quiver& quiv = *quiver_;
  for (std::size_t v = 0; v < quiv.vertex_count(); ++v) paths_.push_back({v, v, {}});

  std::vector<std::vector<std::size_t>> out(quiv.vertex_count());
  for (std::size_t k = 0; k < quiv.arrow_count(); ++k) out[quiv.arrow(k).source].push_back(k);

  std::vector<Path> longer;
  std::vector<Path> frontier;
  for (std::size_t k = 0; k < quiv.arrow_count(); ++k) frontier.push_back({quiv.arrow(k).source, quiv.arrow(k).target, {k}});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (auto& p : frontier) {
      for (auto k : out[p.target]) {
        Path e = p;
        e.arrows.push_back(k);
        e.target = quiv.arrow(k).target;
        next.push_back(std::move(e));
      }
      longer.push_back(std::move(p));
      if (longer.size() + paths_.size() > kMaxBasisSize)
        throw Error(ErrorCode::DimensionGuard, "path algebra has more than " + std::to_string(kMaxBasisSize) + " basis paths");
    }
    frontier = std::move(next);
  }
  auto key = [&](const Path& p) {
    std::vector<std::string> ids;
    for (auto k : p.arrows) ids.push_back(quiv.arrow(k).id);
    return std::make_pair(p.arrows.size(), ids);
  };
  std::stable_sort(longer.begin(), longer.end(), [&](const Path& a, const Path& b) { return key(a) < key(b); });
  for (auto& p : longer) paths_.push_back(std::move(p));

  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = quiv.vertex_count(); k < paths_.size(); ++k) index[paths_[k].arrows] = k;
  arrow_index_.resize(quiv.arrow_count());
  for (std::size_t k = 0; k < quiv.arrow_count(); ++k) arrow_index_[k] = index.at({k});

  const std::size_t n = paths_.size();
  table_.assign(n * n, kZero);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Path& px = paths_[x];
      const Path& py = paths_[y];
      if (py.target != px.source) continue;
      if (px.trivial()) {
        table_[x * n + y] = y;
      } else if (py.trivial()) {
        table_[x * n + y] = x;
      } else {
        auto arrows = py.arrows;
        arrows.insert(arrows.end(), px.arrows.begin(), px.arrows.end());
        table_[x * n + y] = index.at(arrows);
      }
    }
}

std::string PathAlgebraBasis::name(std::size_t k) const {
  const Path& p = paths_.at(k);
  if (p.trivial()) return "e" + std::to_string(p.source + 1);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += quiver_->arrow(*it).id;
  }
  return out;
}

std::optional<std::size_t> PathAlgebraBasis::parse(const std::string& text) const {
  for (std::size_t k = 0; k < paths_.size(); ++k)
    if (name(k) == text) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tensor arithmetic

void add_term(Tensor2& t, std::size_t x, std::size_t y, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t.try_emplace({x, y}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t.erase(it);
  }
}

namespace {

template <class Map, class Key>
void accumulate(Map& m, const Key& key, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) m.erase(it);
  }
}

Tensor3 multiply3(const PathAlgebraBasis& b, const Tensor3& lhs, const Tensor3& rhs) {
  Tensor3 out;
  for (const auto& [k1, c1] : lhs)
    for (const auto& [k2, c2] : rhs) {
      std::array<std::size_t, 3> key{};
      bool zero = false;
      for (int s = 0; s < 3 && !zero; ++s) {
        auto p = b.product(k1[s], k2[s]);
        if (!p) zero = true;
        else key[s] = *p;
      }
      if (!zero) accumulate(out, key, c1 * c2);
    }
  return out;
}

std::string term_list(const PathAlgebraBasis& b, std::initializer_list<std::size_t> paths) {
  std::string out;
  for (auto p : paths) {
    if (!out.empty()) out += ", ";
    out += b.name(p);
  }
  return out;
}

}  // namespace

Tensor2 multiply(const PathAlgebraBasis& b, const Tensor2& lhs, const Tensor2& rhs) {
  Tensor2 out;
  for (const auto& [k1, c1] : lhs)
    for (const auto& [k2, c2] : rhs) {
      auto x = b.product(k1.first, k2.first);
      if (!x) continue;
      auto y = b.product(k1.second, k2.second);
      if (!y) continue;
      add_term(out, *x, *y, c1 * c2);
    }
  return out;
}

std::vector<Rational> extend_counit(const PathAlgebraBasis& b, const std::vector<Rational>& on_generators) {
  if (on_generators.size() != b.generator_count())
    throw Error(ErrorCode::LengthMismatch, "counit needs one value per generator");
  std::vector<Rational> out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    const Path& p = b.path(k);
    if (p.trivial()) {
      out[k] = on_generators[p.source];
      continue;
    }
    Rational prod = 1;
    for (auto a : p.arrows) prod *= on_generators[b.vertex_count() + a];
    out[k] = prod;
  }
  return out;
}

Tensor2 delta_of(const CoproductSpec& s, std::size_t path) {
  const PathAlgebraBasis& b = *s.basis;
  const Path& p = b.path(path);
  if (p.trivial()) return s.delta.at(p.source);
  Tensor2 acc = s.delta.at(b.vertex_count() + p.arrows.front());
  for (std::size_t k = 1; k < p.arrows.size(); ++k) acc = multiply(b, s.delta.at(b.vertex_count() + p.arrows[k]), acc);
  return acc;
}

Tensor2 delta_unit(const CoproductSpec& s) {
  Tensor2 out;
  for (std::size_t v = 0; v < s.basis->vertex_count(); ++v)
    for (const auto& [k, c] : s.delta.at(v)) add_term(out, k.first, k.second, c);
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

namespace {

void validate_shape(const CoproductSpec& s) {
  if (!s.basis) throw Error(ErrorCode::StructureInvalid, "coproduct spec has no basis");
  if (s.delta.size() != s.basis->generator_count())
    throw Error(ErrorCode::StructureInvalid, "coproduct spec needs one image per generator");
  if (s.counit.size() != s.basis->size())
    throw Error(ErrorCode::StructureInvalid, "counit needs one value per basis path");
  for (const auto& t : s.delta)
    for (const auto& [k, c] : t)
      if (k.first >= s.basis->size() || k.second >= s.basis->size())
        throw Error(ErrorCode::StructureInvalid, "coproduct term outside the path basis");
}

}  // namespace

AxiomReport check_axioms(const CoproductSpec& s) {
  validate_shape(s);
  const PathAlgebraBasis& b = *s.basis;
  const std::size_t n = b.size();
  std::vector<Tensor2> deltas(n);
  for (std::size_t k = 0; k < n; ++k) deltas[k] = delta_of(s, k);

  AxiomReport report;
  auto record = [&](std::string name, std::string witness) {
    AxiomResult r{std::move(name), witness.empty(), std::move(witness)};
    if (!r.ok && report.ok) {
      report.ok = false;
      report.first_failure = r.name;
    }
    report.axioms.push_back(std::move(r));
  };

  // Delta(x) Delta(y) = Delta(xy), including xy = 0.
  {
    std::string witness;
    for (std::size_t x = 0; x < n && witness.empty(); ++x)
      for (std::size_t y = 0; y < n && witness.empty(); ++y) {
        const Tensor2 lhs = multiply(b, deltas[x], deltas[y]);
        const auto xy = b.product(x, y);
        const bool ok = xy ? lhs == deltas[*xy] : lhs.empty();
        if (!ok) witness = "x = " + b.name(x) + ", y = " + b.name(y);
      }
    record("multiplicativity", witness);
  }

  // (Delta (x) id) Delta = (id (x) Delta) Delta.
  {
    std::string witness;
    for (std::size_t x = 0; x < n && witness.empty(); ++x) {
      Tensor3 left, right;
      for (const auto& [k, c] : deltas[x]) {
        for (const auto& [k2, c2] : deltas[k.first]) accumulate(left, std::array{k2.first, k2.second, k.second}, c * c2);
        for (const auto& [k2, c2] : deltas[k.second]) accumulate(right, std::array{k.first, k2.first, k2.second}, c * c2);
      }
      if (left != right) witness = "x = " + b.name(x);
    }
    record("coassociativity", witness);
  }

  // (eps (x) id) Delta = id = (id (x) eps) Delta.
  {
    std::string left_witness, right_witness;
    for (std::size_t x = 0; x < n; ++x) {
      AlgebraElement left, right;
      for (const auto& [k, c] : deltas[x]) {
        accumulate(left, k.second, c * s.counit[k.first]);
        accumulate(right, k.first, c * s.counit[k.second]);
      }
      const AlgebraElement expect{{x, Rational(1)}};
      if (left_witness.empty() && left != expect) left_witness = "x = " + b.name(x);
      if (right_witness.empty() && right != expect) right_witness = "x = " + b.name(x);
    }
    record("counit-left", left_witness);
    record("counit-right", right_witness);
  }

  // (Delta(1) (x) 1)(1 (x) Delta(1)) = (Delta (x) id) Delta(1) = (1 (x) Delta(1))(Delta(1) (x) 1).
  {
    const Tensor2 unit = delta_unit(s);
    Tensor3 u_one, one_u, middle;
    for (const auto& [k, c] : unit) {
      for (std::size_t v = 0; v < b.vertex_count(); ++v) {
        accumulate(u_one, std::array{k.first, k.second, v}, c);
        accumulate(one_u, std::array{v, k.first, k.second}, c);
      }
      for (const auto& [k2, c2] : deltas[k.first]) accumulate(middle, std::array{k2.first, k2.second, k.second}, c * c2);
    }
    std::string witness;
    if (multiply3(b, u_one, one_u) != middle) witness = "left product differs from (Delta (x) id) Delta(1)";
    else if (multiply3(b, one_u, u_one) != middle) witness = "right product differs from (Delta (x) id) Delta(1)";
    record("weak-unit", witness);
  }

  // eps(xyz) = sum eps(x y1) eps(y2 z) = sum eps(x y2) eps(y1 z).
  {
    std::vector<Rational> eps_prod(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (auto p = b.product(x, y)) eps_prod[x * n + y] = s.counit[*p];
    std::string witness;
    for (std::size_t y = 0; y < n && witness.empty(); ++y)
      for (std::size_t x = 0; x < n && witness.empty(); ++x)
        for (std::size_t z = 0; z < n && witness.empty(); ++z) {
          Rational lhs = 0;
          if (auto xy = b.product(x, y))
            if (auto xyz = b.product(*xy, z)) lhs = s.counit[*xyz];
          Rational first = 0, second = 0;
          for (const auto& [k, c] : deltas[y]) {
            first += c * eps_prod[x * n + k.first] * eps_prod[k.second * n + z];
            second += c * eps_prod[x * n + k.second] * eps_prod[k.first * n + z];
          }
          if (lhs != first || lhs != second) witness = "x, y, z = " + term_list(b, {x, y, z});
        }
    record("weak-counit", witness);
  }

  Tensor2 one_one;
  for (std::size_t u = 0; u < b.vertex_count(); ++u)
    for (std::size_t v = 0; v < b.vertex_count(); ++v) add_term(one_one, u, v, 1);
  report.bialgebra = delta_unit(s) == one_one;
  return report;
}

std::shared_ptr<const WeakBialgebra> WeakBialgebra::create(CoproductSpec spec, std::string name,
                                                           std::optional<Representation> unit) {
  AxiomReport report = check_axioms(spec);
  if (!report.ok) {
    std::string witness;
    for (const auto& a : report.axioms)
      if (a.name == report.first_failure) witness = a.witness;
    throw Error(ErrorCode::StructureInvalid, "structure '" + name + "' fails " + report.first_failure + " (" + witness + ")");
  }
  std::shared_ptr<WeakBialgebra> out(new WeakBialgebra());
  const CoproductSpec canonical = canonical_wba(spec.basis->quiver_ptr());
  out->canonical_ = canonical.delta == spec.delta && canonical.counit == spec.counit;
  out->deltas_.resize(spec.basis->size());
  for (std::size_t k = 0; k < spec.basis->size(); ++k) out->deltas_[k] = delta_of(spec, k);
  out->spec_ = std::move(spec);
  out->name_ = std::move(name);
  out->report_ = std::move(report);
  out->unit_ = std::move(unit);
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

CoproductSpec canonical_wba(const QuiverPtr& q) {
  CoproductSpec s;
  s.basis = std::make_shared<const PathAlgebraBasis>(q);
  const auto& b = *s.basis;
  s.delta.resize(b.generator_count());
  for (std::size_t g = 0; g < b.generator_count(); ++g) add_term(s.delta[g], b.generator_path(g), b.generator_path(g), 1);
  s.counit.assign(b.size(), Rational(1));
  return s;
}

CoproductSpec ht_bialgebra(const QuiverPtr& q) {
  bool into = false, out_of = false;
  for (const auto& a : q->arrows()) {
    if (a.target == 0) into = true;
    if (a.source == 0) out_of = true;
  }
  if (into && out_of) throw Error(ErrorCode::WrongQuiver, "vertex 1 must be a source or a sink");
  CoproductSpec s;
  s.basis = std::make_shared<const PathAlgebraBasis>(q);
  const auto& b = *s.basis;
  s.delta.resize(b.generator_count());
  for (std::size_t i = 0; i < b.vertex_count(); ++i) {
    add_term(s.delta[i], i, i, 1);
    for (std::size_t j = 0; j < i; ++j) {
      add_term(s.delta[i], i, j, 1);
      add_term(s.delta[i], j, i, 1);
    }
  }
  for (std::size_t k = 0; k < q->arrow_count(); ++k) {
    const std::size_t p = b.arrow_path(k);
    add_term(s.delta[b.vertex_count() + k], 0, p, 1);
    add_term(s.delta[b.vertex_count() + k], p, 0, 1);
  }
  s.counit.assign(b.size(), Rational(0));
  s.counit[0] = 1;
  return s;
}

namespace {

using Terms = std::vector<std::pair<std::size_t, std::size_t>>;

// Structures (a)-(d) share a shape: one vertex g is grouplike with counit 1,
// the other vertex h gets the remaining pairs, arrows are primitive-like
// around `anchor`. `split` selects whether Delta(g) also contains h (x) h.
CoproductSpec two_vertex_structure(const QuiverPtr& q, std::size_t g, bool split, std::size_t anchor) {
  const std::size_t h = 1 - g;
  CoproductSpec s;
  s.basis = std::make_shared<const PathAlgebraBasis>(q);
  const auto& b = *s.basis;
  s.delta.resize(b.generator_count());
  add_term(s.delta[g], g, g, 1);
  if (split) {
    add_term(s.delta[g], h, h, 1);
  } else {
    add_term(s.delta[h], h, h, 1);
  }
  add_term(s.delta[h], g, h, 1);
  add_term(s.delta[h], h, g, 1);
  for (std::size_t k = 0; k < q->arrow_count(); ++k) {
    const std::size_t p = b.arrow_path(k);
    add_term(s.delta[b.vertex_count() + k], anchor, p, 1);
    add_term(s.delta[b.vertex_count() + k], p, anchor, 1);
  }
  std::vector<Rational> gen(b.generator_count(), Rational(0));
  gen[g] = 1;
  s.counit = extend_counit(b, gen);
  return s;
}

std::vector<NamedSpec> two_vertex_catalog(const QuiverPtr& q, const std::string& prefix) {
  std::vector<NamedSpec> out;
  // (a), (b): e1 carries the counit; (c), (d): e2. Arrows wrap the same vertex.
  out.push_back({prefix + "-a", two_vertex_structure(q, 0, false, 0), simple(q, 0)});
  out.push_back({prefix + "-b", two_vertex_structure(q, 0, true, 0), simple(q, 0)});
  out.push_back({prefix + "-c", two_vertex_structure(q, 1, false, 1), simple(q, 1)});
  out.push_back({prefix + "-d", two_vertex_structure(q, 1, true, 1), simple(q, 1)});
  out.push_back({prefix + "-e", canonical_wba(q), unit_representation(q)});
  return out;
}

}  // namespace

std::vector<NamedSpec> catalog_k2() { return two_vertex_catalog(share(Quiver(2, {})), "k2"); }

std::vector<NamedSpec> catalog_kronecker(std::size_t w) {
  if (w == 0) throw Error(ErrorCode::WrongQuiver, "Kronecker-type quiver needs at least one arrow");
  return two_vertex_catalog(share(kronecker_quiver(w)), "kronecker");
}

// ---------------------------------------------------------------------------
// Modules and the induced tensor product

LeftModule as_module(const Representation& m) {
  const Quiver& q = m.quiver();
  LeftModule out;
  out.offsets.resize(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    out.offsets[v] = out.dimension;
    out.dimension += m.dim(v);
  }
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    RationalMatrix e(out.dimension, out.dimension);
    for (std::size_t k = 0; k < m.dim(v); ++k) e(out.offsets[v] + k, out.offsets[v] + k) = 1;
    out.generators.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    RationalMatrix act(out.dimension, out.dimension);
    const RationalMatrix& map = m.map(k);
    for (std::size_t r = 0; r < map.rows(); ++r)
      for (std::size_t c = 0; c < map.cols(); ++c) act(out.offsets[a.target] + r, out.offsets[a.source] + c) = map(r, c);
    out.generators.push_back(std::move(act));
  }
  return out;
}

bool is_quiver_action(const LeftModule& m, const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (m.generators.size() != n + q.arrow_count()) return false;
  RationalMatrix sum(m.dimension, m.dimension);
  for (std::size_t u = 0; u < n; ++u) {
    sum = sum + m.generators[u];
    for (std::size_t v = 0; v < n; ++v) {
      const RationalMatrix prod = m.generators[u] * m.generators[v];
      if (u == v ? !(prod == m.generators[u]) : !prod.is_zero()) return false;
    }
  }
  if (!(sum == RationalMatrix::identity(m.dimension))) return false;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    const RationalMatrix& act = m.generators[n + k];
    if (!(m.generators[a.target] * act * m.generators[a.source] == act)) return false;
  }
  return true;
}

namespace {

class PathActions {
 public:
  PathActions(const PathAlgebraBasis& b, const Representation& m) : basis_(b), module_(as_module(m)), cache_(b.size()) {}

  const RationalMatrix& operator()(std::size_t path) {
    auto& slot = cache_[path];
    if (!slot) {
      const Path& p = basis_.path(path);
      if (p.trivial()) {
        slot = module_.generators[p.source];
      } else {
        RationalMatrix acc = module_.generators[basis_.vertex_count() + p.arrows.front()];
        for (std::size_t k = 1; k < p.arrows.size(); ++k)
          acc = module_.generators[basis_.vertex_count() + p.arrows[k]] * acc;
        slot = std::move(acc);
      }
    }
    return *slot;
  }

  std::size_t dimension() const { return module_.dimension; }

 private:
  const PathAlgebraBasis& basis_;
  LeftModule module_;
  std::vector<std::optional<RationalMatrix>> cache_;
};

RationalMatrix act(const Tensor2& t, PathActions& left, PathActions& right) {
  const std::size_t w = left.dimension() * right.dimension();
  RationalMatrix out(w, w);
  for (const auto& [k, c] : t) {
    const RationalMatrix& a = left(k.first);
    const RationalMatrix& b = right(k.second);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (sgn(a(i, j)) == 0) continue;
        const Rational aij = c * a(i, j);
        for (std::size_t k2 = 0; k2 < b.rows(); ++k2)
          for (std::size_t l = 0; l < b.cols(); ++l)
            if (sgn(b(k2, l)) != 0) out(i * b.rows() + k2, j * b.cols() + l) += aij * b(k2, l);
      }
  }
  return out;
}

bool is_diagonal(const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && sgn(m(r, c)) != 0) return false;
  return true;
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  if (is_diagonal(m)) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (sgn(m(k, k)) != 0) out.push_back(k);
    return out;
  }
  return linalg::column_basis(m);
}

}  // namespace

Representation tensor_wba(const WeakBialgebra& s, const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  if (!(m.quiver() == s.quiver()))
    throw Error(ErrorCode::QuiverMismatch, "representation is not over the structure's quiver");
  const std::size_t w = m.total_dim() * n.total_dim();
  if (w > kMaxTensorDim)
    throw Error(ErrorCode::DimensionGuard, "M (x) N has dimension " + std::to_string(w) + " > " + std::to_string(kMaxTensorDim));
  const Quiver& q = m.quiver();
  if (w == 0) return zero_representation(m.quiver_ptr());

  const PathAlgebraBasis& b = s.basis();
  PathActions left(b, m), right(b, n);
  const std::size_t nv = q.vertex_count();

  std::vector<RationalMatrix> idem(nv), basis(nv);
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    idem[v] = act(s.delta(v), left, right);
    basis[v] = linalg::select_columns(idem[v], pivot_columns(idem[v]));
    dims[v] = basis[v].cols();
  }
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = 0; v < nv; ++v) {
      const RationalMatrix img = idem[u] * basis[v];
      if (u == v ? !(img == basis[v]) : !img.is_zero())
        throw Error(ErrorCode::NotAQuiverAction, "restricted vertex idempotents are not orthogonal projections");
    }

  std::vector<RationalMatrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    const RationalMatrix action = act(s.delta(b.arrow_path(k)), left, right);
    for (std::size_t u = 0; u < nv; ++u)
      if (u != a.source && !(action * basis[u]).is_zero())
        throw Error(ErrorCode::NotAQuiverAction, "arrow '" + a.id + "' acts outside its source vertex");
    const RationalMatrix image = action * basis[a.source];
    auto x = linalg::solve_full_column_rank(basis[a.target], image);
    if (!x) throw Error(ErrorCode::NotAQuiverAction, "arrow '" + a.id + "' does not land in its target vertex");
    maps.push_back(std::move(*x));
  }
  return {m.quiver_ptr(), std::move(dims), std::move(maps)};
}

UnitCheck check_unit(const WeakBialgebra& s, const Representation& unit, std::uint64_t seed) {
  const QuiverPtr& q = unit.quiver_ptr();
  std::vector<Representation> samples;
  for (std::size_t v = 0; v < q->vertex_count(); ++v) samples.push_back(simple(q, v));
  samples.push_back(unit_representation(q));
  for (std::uint64_t k = 0; k < 3; ++k) samples.push_back(random_representation(q, 2, seed + k));
  UnitCheck out{true, true};
  for (const auto& x : samples) {
    if (out.left && isomorphism_test(tensor_wba(s, unit, x), x, seed) != IsoVerdict::Isomorphic) out.left = false;
    if (out.right && isomorphism_test(tensor_wba(s, x, unit), x, seed) != IsoVerdict::Isomorphic) out.right = false;
  }
  return out;
}

Representation find_unit(const WeakBialgebra& s, std::uint64_t seed) {
  if (s.unit() && check_unit(s, *s.unit(), seed).left) return *s.unit();
  const QuiverPtr q = s.basis().quiver_ptr();
  const std::size_t n = q->vertex_count();
  if (n > 12) throw Error(ErrorCode::UnitNotFound, "unit search is limited to 12 vertices");
  std::vector<std::uint32_t> supports((std::size_t{1} << n) - 1);
  std::iota(supports.begin(), supports.end(), 1u);
  std::stable_sort(supports.begin(), supports.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  for (auto mask : supports) {
    std::vector<bool> support(n);
    for (std::size_t v = 0; v < n; ++v) support[v] = (mask >> v) & 1u;
    const Representation candidate = thin_representation(q, support);
    try {
      if (check_unit(s, candidate, seed).left) return candidate;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DimensionGuard) throw;
    }
  }
  throw Error(ErrorCode::UnitNotFound, "no thin representation acts as a unit for '" + s.name() + "'");
}

DiscreteReport is_discrete(const WeakBialgebra& s) {
  const QuiverPtr q = s.basis().quiver_ptr();
  DiscreteReport out;
  for (std::size_t i = 0; i < q->vertex_count(); ++i)
    for (std::size_t j = 0; j < q->vertex_count(); ++j) {
      const Representation t = tensor_wba(s, simple(q, i), simple(q, j));
      const bool ok = i == j ? t.dims() == simple(q, i).dims() : t.is_zero();
      if (!ok) out.failures.emplace_back(i, j);
    }
  out.discrete = out.failures.empty();
  return out;
}

// ---------------------------------------------------------------------------
// Equivalence search

namespace {

AlgebraElement multiply(const PathAlgebraBasis& b, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [p, c] : x)
    for (const auto& [r, d] : y)
      if (auto pr = b.product(p, r)) accumulate(out, *pr, c * d);
  return out;
}

long long det(std::vector<int> m, std::size_t n) {
  // Cofactor expansion; n <= 4 in practice.
  if (n == 1) return m[0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c] == 0) continue;
    std::vector<int> minor;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor.push_back(m[r * n + k]);
    total += (c % 2 == 0 ? 1 : -1) * m[c] * det(minor, n - 1);
  }
  return total;
}

// Invertible matrices over {-1, 0, 1}, identity first, at most `limit`.
std::vector<std::vector<int>> small_invertibles(std::size_t n, std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> id(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) id[k * n + k] = 1;
  out.push_back(id);
  std::vector<int> m(n * n, -1);
  while (out.size() < limit) {
    if (m != id && det(m, n) != 0) out.push_back(m);
    std::size_t pos = 0;
    while (pos < m.size() && m[pos] == 1) m[pos++] = -1;
    if (pos == m.size()) break;
    ++m[pos];
  }
  return out;
}

}  // namespace

std::optional<Automorphism> equivalent_structures(const CoproductSpec& s1, const CoproductSpec& s2, std::size_t budget) {
  validate_shape(s1);
  validate_shape(s2);
  const PathAlgebraBasis& b = *s1.basis;
  const Quiver& q = b.quiver();
  if (!(q == s2.basis->quiver())) return std::nullopt;
  const std::size_t n = q.vertex_count();
  if (n > 8) return std::nullopt;

  std::vector<Tensor2> deltas1(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) deltas1[k] = delta_of(s1, k);

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) groups[{q.arrow(k).source, q.arrow(k).target}].push_back(k);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t tried = 0;
  do {
    // The permutation must carry each arrow group onto one of equal size.
    bool preserved = true;
    for (const auto& [ends, arrows] : groups) {
      auto it = groups.find({perm[ends.first], perm[ends.second]});
      if (it == groups.end() || it->second.size() != arrows.size()) preserved = false;
    }
    if (!preserved) continue;

    std::vector<std::vector<std::vector<int>>> choices;
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    for (const auto& [ends, arrows] : groups) {
      keys.push_back(ends);
      choices.push_back(small_invertibles(arrows.size(), budget));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      if (++tried > budget) return std::nullopt;
      Automorphism sigma{perm, std::vector<AlgebraElement>(q.arrow_count())};
      for (std::size_t g = 0; g < keys.size(); ++g) {
        const auto& src = groups.at(keys[g]);
        const auto& dst = groups.at({perm[keys[g].first], perm[keys[g].second]});
        const auto& c = choices[g][pick[g]];
        for (std::size_t i = 0; i < src.size(); ++i)
          for (std::size_t j = 0; j < dst.size(); ++j)
            if (c[i * src.size() + j] != 0) sigma.arrow_images[src[i]][b.arrow_path(dst[j])] = c[i * src.size() + j];
      }
      // sigma on every basis path.
      std::vector<AlgebraElement> image(b.size());
      for (std::size_t k = 0; k < b.size(); ++k) {
        const Path& p = b.path(k);
        if (p.trivial()) {
          image[k] = {{perm[p.source], Rational(1)}};
          continue;
        }
        AlgebraElement acc = sigma.arrow_images[p.arrows.front()];
        for (std::size_t a = 1; a < p.arrows.size(); ++a) acc = multiply(b, sigma.arrow_images[p.arrows[a]], acc);
        image[k] = std::move(acc);
      }
      bool ok = true;
      for (std::size_t k = 0; k < b.size() && ok; ++k) {
        Rational e = 0;
        for (const auto& [p, c] : image[k]) e += c * s1.counit[p];
        ok = e == s2.counit[k];
      }
      for (std::size_t g = 0; g < b.generator_count() && ok; ++g) {
        Tensor2 lhs;
        for (const auto& [p, c] : image[b.generator_path(g)])
          for (const auto& [kk, d] : deltas1[p]) add_term(lhs, kk.first, kk.second, c * d);
        Tensor2 rhs;
        for (const auto& [kk, d] : s2.delta[g])
          for (const auto& [x, cx] : image[kk.first])
            for (const auto& [y, cy] : image[kk.second]) add_term(rhs, x, y, d * cx * cy);
        ok = lhs == rhs;
      }
      if (ok) return sigma;

      std::size_t pos = 0;
      while (pos < pick.size() && pick[pos] + 1 == choices[pos].size()) pick[pos++] = 0;
      if (pos == pick.size()) break;
      ++pick[pos];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Corruption corrupt_one_coefficient(const CoproductSpec& s, std::mt19937_64& rng) {
  validate_shape(s);
  const PathAlgebraBasis& b = *s.basis;
  Corruption out{s, ""};
  std::uniform_int_distribution<int> magnitude(1, 3), sign(0, 1);
  const Rational amount = Rational(magnitude(rng) * (sign(rng) ? 1 : -1));

  std::size_t existing = 0;
  for (const auto& t : s.delta) existing += t.size();
  std::uniform_int_distribution<int> kind(existing == 0 ? 1 : 0, 2);
  switch (kind(rng)) {
    case 0: {
      std::size_t pick = std::uniform_int_distribution<std::size_t>(0, existing - 1)(rng);
      for (std::size_t g = 0; g < s.delta.size(); ++g) {
        if (pick >= s.delta[g].size()) {
          pick -= s.delta[g].size();
          continue;
        }
        auto it = std::next(s.delta[g].begin(), static_cast<std::ptrdiff_t>(pick));
        add_term(out.spec.delta[g], it->first.first, it->first.second, amount);
        out.description = "Delta(" + b.name(b.generator_path(g)) + ") term " + b.name(it->first.first) + " (x) " +
                          b.name(it->first.second) + " += " + to_string(amount);
        break;
      }
      break;
    }
    case 1: {
      const std::size_t g = std::uniform_int_distribution<std::size_t>(0, b.generator_count() - 1)(rng);
      std::uniform_int_distribution<std::size_t> path(0, b.size() - 1);
      const std::size_t x = path(rng), y = path(rng);
      add_term(out.spec.delta[g], x, y, amount);
      out.description = "Delta(" + b.name(b.generator_path(g)) + ") term " + b.name(x) + " (x) " + b.name(y) + " += " +
                        to_string(amount);
      break;
    }
    default: {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng);
      out.spec.counit[k] += amount;
      out.description = "epsilon(" + b.name(k) + ") += " + to_string(amount);
      break;
    }
  }
  return out;
}

}  // namespace fpq::wba
