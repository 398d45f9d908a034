#include "fpq/fpengine.hpp"

#include <cmath>

#include "fpq/error.hpp"
#include "fpq/hom.hpp"
#include "fpq/parallel.hpp"

namespace fpq::fp {

using bricks::DerivedObject;
using spectral::NonnegIntMatrix;

TensorStructure TensorStructure::from_wba(wba::WbaPtr structure) {
  if (!structure) throw Error(ErrorCode::StructureInvalid, "missing weak bialgebra structure");
  TensorStructure ts;
  ts.wba_ = std::move(structure);
  return ts;
}

std::string TensorStructure::name() const { return wba_ ? "wba:" + wba_->name() : "vertexwise"; }

Representation TensorStructure::tensor(const Representation& m, const Representation& x) const {
  return wba_ ? wba::tensor_wba(*wba_, m, x) : tensor_vertexwise(m, x);
}

std::string mode_name(Mode mode) { return mode == Mode::Exact ? "Exact" : "LowerBound"; }

namespace {

// Snap values that are integers up to rounding noise.
void finish_value(FpdReport& r) {
  const double nearest = std::round(r.value);
  if (std::fabs(r.value - nearest) < 1e-6) {
    r.integer_value = static_cast<long long>(nearest);
    r.value = nearest;
  }
}

std::vector<Representation> tensors(const std::vector<DerivedObject>& phi, const Representation& m,
                                    const TensorStructure& ts) {
  std::vector<std::optional<Representation>> slots(phi.size());
  parallel_for(phi.size(), [&](std::size_t j) { slots[j] = ts.tensor(m, phi[j].rep); });
  std::vector<Representation> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class Entry>
NonnegIntMatrix fill(std::size_t n, Entry&& entry) {
  std::vector<std::size_t> values(n * n);
  parallel_for(n * n, [&](std::size_t k) { values[k] = entry(k / n, k % n); });
  NonnegIntMatrix a(n);
  for (std::size_t k = 0; k < n * n; ++k) a.set(k / n, k % n, BigInt(static_cast<unsigned long>(values[k])));
  return a;
}

void require_one_quiver(const std::vector<DerivedObject>& phi, const Representation& m) {
  for (const auto& x : phi) require_same_quiver(x.rep, m);
}

NonnegIntMatrix submatrix(const NonnegIntMatrix& h, const std::vector<std::size_t>& members) {
  return h.principal_submatrix(members);
}

struct Best {
  double value = 0;
  std::vector<std::size_t> members;
  bool set = false;
};

// Deterministic max over cliques: the first clique (in sorted order) wins ties.
Best maximise(const NonnegIntMatrix& h, const std::vector<std::vector<std::size_t>>& cliques) {
  std::vector<double> rho(cliques.size());
  parallel_for(cliques.size(), [&](std::size_t k) { rho[k] = spectral::spectral_radius(submatrix(h, cliques[k])); });
  Best best;
  for (std::size_t k = 0; k < cliques.size(); ++k)
    if (!best.set || rho[k] > best.value + 1e-9) {
      best = {rho[k], cliques[k], true};
    }
  return best;
}

FpdReport exact_report(const NonnegIntMatrix& h, const Universe& u, int shift, const TensorStructure& ts) {
  FpdReport r;
  r.mode = Mode::Exact;
  r.shift = shift;
  r.structure = ts.name();
  r.brick_sets_evaluated = u.maximal_sets().size();
  const Best best = maximise(h, u.maximal_sets());
  r.value = best.value;
  if (best.set) {
    std::vector<DerivedObject> members;
    for (auto k : best.members) members.push_back(u.objects()[k]);
    r.adjacency = submatrix(h, best.members);
    auto check = bricks::check_brick_set(members);
    r.witness = {std::move(members), std::move(check.certificate)};
  }
  finish_value(r);
  return r;
}

}  // namespace

NonnegIntMatrix adjacency(const std::vector<DerivedObject>& phi, const Representation& m, int shift,
                          const TensorStructure& ts) {
  require_one_quiver(phi, m);
  const auto t = tensors(phi, m, ts);
  return fill(phi.size(), [&](std::size_t i, std::size_t j) {
    return bricks::derived_hom_dim(phi[i].rep, phi[i].shift, t[j], phi[j].shift + shift);
  });
}

NonnegIntMatrix adjacency_opposite(const std::vector<DerivedObject>& phi, const Representation& m, int shift,
                                   const TensorStructure& ts) {
  require_one_quiver(phi, m);
  const auto t = tensors(phi, m, ts);
  return fill(phi.size(), [&](std::size_t i, std::size_t j) {
    return bricks::derived_hom_dim(t[j], phi[j].shift + shift, phi[i].rep, phi[i].shift);
  });
}

Universe::Universe(std::vector<Representation> indecomposables, std::vector<std::string> labels, std::size_t cap) {
  for (std::size_t k = 0; k < indecomposables.size(); ++k) {
    const Representation& x = indecomposables[k];
    const std::string label = k < labels.size() ? labels[k] : "X" + std::to_string(k + 1);
    if (k > 0) require_same_quiver(indecomposables.front(), x);
    if (x.is_zero()) throw Error(ErrorCode::IncompleteList, label + " is the zero representation");
    if (!bricks::is_brick(x)) throw Error(ErrorCode::IncompleteList, label + " is not a brick");
    for (std::size_t l = 0; l < k; ++l)
      if (indecomposables[l].dims() == x.dims() && isomorphism_test(indecomposables[l], x) == IsoVerdict::Isomorphic)
        throw Error(ErrorCode::IncompleteList, label + " repeats " + objects_[l].label + " up to isomorphism");
    objects_.push_back({x, 0, label});
  }
  const auto g = bricks::compatibility_graph(objects_);
  const auto result = bricks::maximal_cliques(g.adjacent, cap);
  if (!result.complete) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " maximal brick sets");
  for (const auto& clique : result.cliques) {
    std::vector<std::size_t> members;
    for (auto p : clique) members.push_back(g.nodes[p]);
    cliques_.push_back(std::move(members));
  }
}

Universe Universe::type_a(const type_a::OrientationWord& w, std::size_t cap) {
  std::vector<Representation> reps;
  std::vector<std::string> labels;
  for (const auto& v : type_a::all_indecomposables(w)) {
    reps.push_back(type_a::interval_rep(w, v));
    labels.push_back(type_a::label(v));
  }
  return Universe(std::move(reps), std::move(labels), cap);
}

FpdReport fpd_exact(const Representation& m, int shift, const TensorStructure& ts, const Universe& u) {
  const auto& obj = u.objects();
  require_one_quiver(obj, m);
  const auto t = tensors(obj, m, ts);
  const NonnegIntMatrix h = fill(obj.size(), [&](std::size_t i, std::size_t j) {
    return bricks::derived_hom_dim(obj[i].rep, 0, t[j], shift);
  });
  return exact_report(h, u, shift, ts);
}

FpdReport fpd_exact(const Representation& m, int shift, const TensorStructure& ts,
                    const std::vector<Representation>& indecomposables) {
  return fpd_exact(m, shift, ts, Universe(indecomposables));
}

FpdReport fpd_exact_opposite(const Representation& m, int shift, const TensorStructure& ts, const Universe& u) {
  const auto& obj = u.objects();
  require_one_quiver(obj, m);
  const auto t = tensors(obj, m, ts);
  const NonnegIntMatrix h = fill(obj.size(), [&](std::size_t i, std::size_t j) {
    return bricks::derived_hom_dim(t[j], shift, obj[i].rep, 0);
  });
  return exact_report(h, u, shift, ts);
}

double fpd_mixed_shifts(const Representation& m, int shift, const TensorStructure& ts,
                        const std::vector<Representation>& indecomposables, int lo, int hi) {
  std::vector<DerivedObject> candidates;
  for (int s = lo; s <= hi; ++s)
    for (const auto& x : indecomposables) candidates.push_back({x, s, ""});
  const auto g = bricks::compatibility_graph(candidates);
  const auto cliques = bricks::maximal_cliques(g.adjacent);
  if (!cliques.complete) throw Error(ErrorCode::CapExceeded, "mixed-shift clique cap exceeded");
  std::vector<DerivedObject> nodes;
  for (auto k : g.nodes) nodes.push_back(candidates[k]);
  const NonnegIntMatrix h = adjacency(nodes, m, shift, ts);
  return maximise(h, cliques.cliques).value;
}

FpdReport fpd_lower_bound(const Representation& m, int shift, const TensorStructure& ts,
                          const std::vector<bricks::BrickFamily>& families, std::size_t budget) {
  FpdReport r;
  r.mode = Mode::LowerBound;
  r.shift = shift;
  r.structure = ts.name();
  const QuiverPtr q = m.quiver_ptr();
  bool have = false;
  auto consider = [&](std::vector<DerivedObject> members, NonnegIntMatrix a, double rho) {
    ++r.brick_sets_evaluated;
    if (have && rho <= r.value + 1e-9) return;
    have = true;
    r.value = rho;
    r.adjacency = std::move(a);
    auto check = bricks::check_brick_set(members);
    r.witness = {std::move(members), std::move(check.certificate)};
  };

  // Simple singletons: {S(v)} is always a brick set.
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    std::vector<DerivedObject> phi{{simple(q, v), 0, "S(" + std::to_string(v + 1) + ")"}};
    NonnegIntMatrix a = adjacency(phi, m, shift, ts);
    const double rho = spectral::spectral_radius(a);
    consider(std::move(phi), std::move(a), rho);
  }

  r.family_values.assign(budget, 0.0);
  for (const auto& family : families) {
    bool pattern = budget >= 2;
    for (std::size_t k = 1; k <= budget; ++k) {
      auto phi = family.generate(k);
      if (!bricks::is_brick_set(phi)) {
        pattern = false;
        continue;
      }
      NonnegIntMatrix a = adjacency(phi, m, shift, ts);
      const double rho = spectral::spectral_radius(a);
      r.family_values[k - 1] = std::max(r.family_values[k - 1], rho);
      if (k >= 2) {
        bool found = false;
        for (std::size_t row = 0; row < a.order() && !found; ++row) {
          bool full = true;
          for (std::size_t c = 0; c < a.order() && full; ++c) full = a(row, c) > 0 && a(c, row) > 0;
          found = full;
        }
        pattern = pattern && found;
      }
      consider(std::move(phi), std::move(a), rho);
    }
    if (pattern) r.divergent = true;
  }
  finish_value(r);
  return r;
}

std::size_t fpv_closed_form(const Representation& m, const TensorStructure& ts) {
  if (!ts.is_canonical())
    throw Error(ErrorCode::StructureMismatch, "closed-form fpv needs the canonical structure, got " + ts.name());
  return m.dims().max();
}

namespace {

double nth_root(std::size_t value, std::size_t n) {
  BigInt v(static_cast<unsigned long>(value)), root;
  if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n)) != 0) return root.get_d();
  return std::pow(static_cast<double>(value), 1.0 / static_cast<double>(n));
}

std::size_t predicted_total(const Representation& m, const Representation& x, const TensorStructure& ts) {
  if (!ts.is_vertexwise()) return m.total_dim() * x.total_dim();
  std::size_t total = 0;
  for (std::size_t v = 0; v < m.dims().size(); ++v) total += m.dim(v) * x.dim(v);
  return total;
}

}  // namespace

FpvSequence fpv_empirical(const Representation& m, const TensorStructure& ts, std::size_t n_max) {
  const QuiverPtr q = m.quiver_ptr();
  FpvSequence out;
  out.per_vertex.resize(q->vertex_count());
  parallel_for(q->vertex_count(), [&](std::size_t i) {
    const Representation s = simple(q, i);
    Representation x = s;
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (predicted_total(m, x, ts) > kFpvDimensionGuard) break;
      try {
        x = ts.tensor(m, x);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DimensionGuard) throw;
        break;
      }
      out.per_vertex[i].push_back(nth_root(hom_dim(s, x), n));
    }
  });
  for (const auto& seq : out.per_vertex)
    if (seq.size() < n_max) out.complete = false;
  for (std::size_t n = 0; n < n_max; ++n) {
    double best = 0;
    bool any = false;
    for (const auto& seq : out.per_vertex)
      if (n < seq.size()) {
        best = any ? std::max(best, seq[n]) : seq[n];
        any = true;
      }
    if (!any) break;
    out.max_values.push_back(best);
  }
  return out;
}

}  // namespace fpq::fp
