#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpq/bricks.hpp"
#include "fpq/spectral.hpp"
#include "fpq/type_a.hpp"
#include "fpq/wba.hpp"

namespace fpq::fp {

/// The monoidal structure used for M (x) -: vertex-wise, or induced by a
/// validated weak bialgebra.
class TensorStructure {
 public:
  static TensorStructure vertexwise() { return TensorStructure(); }
  static TensorStructure from_wba(wba::WbaPtr structure);

  bool is_vertexwise() const noexcept { return !wba_; }
  /// Vertex-wise, or a weak bialgebra equal to the canonical one.
  bool is_canonical() const noexcept { return !wba_ || wba_->is_canonical(); }
  const wba::WbaPtr& structure() const noexcept { return wba_; }
  std::string name() const;

  Representation tensor(const Representation& m, const Representation& x) const;

 private:
  TensorStructure() = default;
  wba::WbaPtr wba_;
};

enum class Mode { Exact, LowerBound };

std::string mode_name(Mode mode);

struct FpdReport {
  double value = 0;
  /// Set when value is within 1e-6 of an integer.
  std::optional<long long> integer_value;
  Mode mode = Mode::Exact;
  /// Lower-bound mode: a family showed the unbounded pattern.
  bool divergent = false;
  bricks::BrickSet witness;
  spectral::NonnegIntMatrix adjacency;
  int shift = 0;
  std::string structure;
  std::string field = "Q";
  std::size_t brick_sets_evaluated = 0;
  /// Lower-bound mode: best rho per family size k = 1..budget.
  std::vector<double> family_values;
};

/// a_ij = derived dim Hom(X_i, (M (x) X_j)[s_j + shift]).
spectral::NonnegIntMatrix adjacency(const std::vector<bricks::DerivedObject>& phi, const Representation& m, int shift,
                                    const TensorStructure& ts);

/// Adjacency in the opposite category: a_ij = derived dim Hom((M (x) X_j)[s_j + shift], X_i).
spectral::NonnegIntMatrix adjacency_opposite(const std::vector<bricks::DerivedObject>& phi, const Representation& m,
                                             int shift, const TensorStructure& ts);

/// Precomputed maximal brick sets on a certified complete list of
/// indecomposables (all at shift 0). Reused across objects M and shifts.
class Universe {
 public:
  /// Throws IncompleteList (non-brick, zero or isomorphic members) or
  /// CapExceeded.
  Universe(std::vector<Representation> indecomposables, std::vector<std::string> labels = {},
           std::size_t cap = bricks::kDefaultCliqueCap);
  static Universe type_a(const type_a::OrientationWord& w, std::size_t cap = bricks::kDefaultCliqueCap);

  const std::vector<bricks::DerivedObject>& objects() const noexcept { return objects_; }
  const std::vector<std::vector<std::size_t>>& maximal_sets() const noexcept { return cliques_; }

 private:
  std::vector<bricks::DerivedObject> objects_;
  std::vector<std::vector<std::size_t>> cliques_;  // indices into objects_
};

/// Exact fpd of M[shift] (x) -: the max of rho over all maximal brick sets.
FpdReport fpd_exact(const Representation& m, int shift, const TensorStructure& ts, const Universe& u);
FpdReport fpd_exact(const Representation& m, int shift, const TensorStructure& ts,
                    const std::vector<Representation>& indecomposables);

/// Same, in the opposite category Repr(Q)^op (brick sets are unchanged,
/// Hom arguments swap).
FpdReport fpd_exact_opposite(const Representation& m, int shift, const TensorStructure& ts, const Universe& u);

/// Mixed-shift sweep: maximal brick sets drawn from every indecomposable at
/// every shift in [lo, hi], adjacency with each member's own shift. Returns
/// the max rho.
double fpd_mixed_shifts(const Representation& m, int shift, const TensorStructure& ts,
                        const std::vector<Representation>& indecomposables, int lo, int hi);

/// Lower bound from brick families of size 1..budget plus the simple
/// singletons. Divergent when, for every size k >= 2, some member has a
/// nonzero row and column (so rho >= rho(Gamma_k) >= sqrt k).
FpdReport fpd_lower_bound(const Representation& m, int shift, const TensorStructure& ts,
                          const std::vector<bricks::BrickFamily>& families, std::size_t budget);

/// max_v dim M_v; StructureMismatch for a non-canonical structure.
std::size_t fpv_closed_form(const Representation& m, const TensorStructure& ts = TensorStructure::vertexwise());

inline constexpr std::size_t kFpvDimensionGuard = 1000000;

struct FpvSequence {
  /// per_vertex[i][n-1] = rho(A({S(i)}, M^{(x)n}))^{1/n}.
  std::vector<std::vector<double>> per_vertex;
  /// max over i at each n.
  std::vector<double> max_values;
  /// False when the dimension guard cut the sequence short.
  bool complete = true;
};

FpvSequence fpv_empirical(const Representation& m, const TensorStructure& ts, std::size_t n_max);

}  // namespace fpq::fp
