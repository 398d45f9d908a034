#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fpq/representation.hpp"

namespace fpq::wba {

/// A directed path; `arrows` in traversal order, empty for the trivial path e_source.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  bool trivial() const noexcept { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Basis of kQ: trivial paths e_1..e_n first, then by length, then by the
/// sequence of arrow labels in traversal order.
///
/// Multiplication follows composition: x*y is "y, then x", nonzero only when y
/// ends where x starts. So an arrow a : s -> t satisfies a = e_t a e_s, and
/// the path a1 then a2 is written a2*a1.
class PathAlgebraBasis {
 public:
  explicit PathAlgebraBasis(QuiverPtr q);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  std::size_t size() const noexcept { return paths_.size(); }
  const Path& path(std::size_t k) const { return paths_.at(k); }
  std::size_t vertex_count() const noexcept { return quiver_->vertex_count(); }
  /// Basis index of the length-one path along arrow k.
  std::size_t arrow_path(std::size_t arrow) const { return arrow_index_.at(arrow); }

  std::optional<std::size_t> product(std::size_t x, std::size_t y) const {
    const auto v = table_[x * paths_.size() + y];
    return v == kZero ? std::nullopt : std::optional<std::size_t>(v);
  }

  /// "e1", "a1", "a2*a1".
  std::string name(std::size_t k) const;
  /// Inverse of name(); nullopt when the text is not a basis path.
  std::optional<std::size_t> parse(const std::string& text) const;

  /// Generators are e_1..e_n followed by the arrows; index into the basis.
  std::size_t generator_count() const noexcept { return vertex_count() + quiver_->arrow_count(); }
  std::size_t generator_path(std::size_t g) const { return g < vertex_count() ? g : arrow_path(g - vertex_count()); }

 private:
  static constexpr std::size_t kZero = static_cast<std::size_t>(-1);
  QuiverPtr quiver_;
  std::vector<Path> paths_;
  std::vector<std::size_t> arrow_index_;
  std::vector<std::size_t> table_;
};

inline constexpr std::size_t kMaxBasisSize = 2000;

using BasisPtr = std::shared_ptr<const PathAlgebraBasis>;

/// Finitely supported elements of A, A (x) A and A (x) A (x) A; zero
/// coefficients are never stored.
using AlgebraElement = std::map<std::size_t, Rational>;
using Tensor2 = std::map<std::pair<std::size_t, std::size_t>, Rational>;
using Tensor3 = std::map<std::array<std::size_t, 3>, Rational>;

void add_term(Tensor2& t, std::size_t x, std::size_t y, const Rational& c);
Tensor2 multiply(const PathAlgebraBasis& b, const Tensor2& lhs, const Tensor2& rhs);

/// Coproduct on generators, counit on every basis path.
struct CoproductSpec {
  BasisPtr basis;
  std::vector<Tensor2> delta;     // per generator (vertices, then arrows)
  std::vector<Rational> counit;   // per basis path
};

/// Counit on all paths from its values on generators: a path of positive
/// length gets the product of its arrows' values.
std::vector<Rational> extend_counit(const PathAlgebraBasis& b, const std::vector<Rational>& on_generators);

/// Delta on an arbitrary basis path, extended multiplicatively from generators.
Tensor2 delta_of(const CoproductSpec& s, std::size_t path);
/// Delta(1) = sum of Delta(e_i).
Tensor2 delta_unit(const CoproductSpec& s);

struct AxiomResult {
  std::string name;
  bool ok = true;
  std::string witness;  // first violating basis elements, empty when ok
};

struct AxiomReport {
  bool ok = true;
  bool bialgebra = false;  // Delta(1) = 1 (x) 1
  std::vector<AxiomResult> axioms;
  /// Name of the first failing axiom, empty when ok.
  std::string first_failure;
};

/// Exact check on the full path basis of multiplicativity, coassociativity,
/// both counit laws, the weak unit law and the weak counit law.
AxiomReport check_axioms(const CoproductSpec& s);

/// Validated structure with a precomputed coproduct on every basis path.
class WeakBialgebra {
 public:
  /// Throws StructureInvalid, naming the first failing axiom.
  static std::shared_ptr<const WeakBialgebra> create(CoproductSpec spec, std::string name,
                                                     std::optional<Representation> unit = std::nullopt);

  const CoproductSpec& spec() const noexcept { return spec_; }
  const PathAlgebraBasis& basis() const noexcept { return *spec_.basis; }
  const Quiver& quiver() const noexcept { return spec_.basis->quiver(); }
  const std::string& name() const noexcept { return name_; }
  const AxiomReport& report() const noexcept { return report_; }
  const Tensor2& delta(std::size_t path) const { return deltas_.at(path); }
  /// Catalog-provided unit object, if any.
  const std::optional<Representation>& unit() const noexcept { return unit_; }
  /// Whether this is the grouplike-on-paths structure.
  bool is_canonical() const noexcept { return canonical_; }

 private:
  WeakBialgebra() = default;
  CoproductSpec spec_;
  std::string name_;
  AxiomReport report_;
  std::vector<Tensor2> deltas_;
  std::optional<Representation> unit_;
  bool canonical_ = false;
};

using WbaPtr = std::shared_ptr<const WeakBialgebra>;

/// Delta(p) = p (x) p, epsilon(p) = 1.
CoproductSpec canonical_wba(const QuiverPtr& q);

/// Bialgebra with e_1 grouplike, Delta(e_i) = sum over pairs (a, b) with
/// max(a, b) = i, Delta(p) = e_1 (x) p + p (x) e_1 and epsilon(e_1) = 1, zero
/// elsewhere. Throws WrongQuiver unless vertex 1 is a source or a sink.
CoproductSpec ht_bialgebra(const QuiverPtr& q);

struct NamedSpec {
  std::string name;
  CoproductSpec spec;
  std::optional<Representation> unit;
};

/// Five structures on k^2 (two vertices, no arrows), named k2-a .. k2-e.
std::vector<NamedSpec> catalog_k2();
/// Five structures on 1 => 2 with w arrows, named kronecker-a .. kronecker-e;
/// (e) is the canonical structure.
std::vector<NamedSpec> catalog_kronecker(std::size_t w);

/// Largest total dimension of M (x)_k N that tensor_wba accepts.
inline constexpr std::size_t kMaxTensorDim = 512;

/// Dense action of a quiver representation on the sum of its vertex spaces
/// (vertex blocks in vertex order).
struct LeftModule {
  std::size_t dimension = 0;
  std::vector<std::size_t> offsets;        // start of each vertex block
  std::vector<RationalMatrix> generators;  // e_1..e_n, then arrows
};

LeftModule as_module(const Representation& m);
/// Idempotents orthogonal and summing to 1, arrows a = e_t a e_s.
bool is_quiver_action(const LeftModule& m, const Quiver& q);

/// Delta(1)(M (x)_k N) with the restricted action, converted back to a
/// representation. Vertex spaces take the pivot columns of Delta(e_i) as
/// basis, which reproduces tensor_vertexwise for the canonical structure.
/// Throws QuiverMismatch, NotAQuiverAction or DimensionGuard.
Representation tensor_wba(const WeakBialgebra& s, const Representation& m, const Representation& n);

struct UnitCheck {
  bool left = false;   // 1 (x) M = M on every sample
  bool right = false;  // M (x) 1 = M on every sample
};

/// Tests 1 (x) M and M (x) 1 against samples: simples, the all-k
/// representation and a few seeded random ones.
UnitCheck check_unit(const WeakBialgebra& s, const Representation& unit, std::uint64_t seed = 0);

/// Catalog unit if present, else the first thin representation (by total
/// dimension, then support) that passes check_unit on the left. Throws
/// UnitNotFound.
Representation find_unit(const WeakBialgebra& s, std::uint64_t seed = 0);

struct DiscreteReport {
  bool discrete = true;
  /// Pairs (i, j), 0-based, where S(i) (x) S(j) breaks the Kronecker-delta rule.
  std::vector<std::pair<std::size_t, std::size_t>> failures;
};

DiscreteReport is_discrete(const WeakBialgebra& s);

/// Algebra automorphism: permutation of vertices and an image for every arrow.
struct Automorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<AlgebraElement> arrow_images;
};

/// Bounded search over vertex permutations that preserve arrow counts combined
/// with invertible {-1, 0, 1} substitutions among parallel arrows. nullopt is
/// inconclusive.
std::optional<Automorphism> equivalent_structures(const CoproductSpec& s1, const CoproductSpec& s2,
                                                  std::size_t budget = 100000);

struct Corruption {
  CoproductSpec spec;
  std::string description;
};

/// Adds a random nonzero integer in [-3, 3] to one coefficient: an existing
/// coproduct term, a new coproduct term, or one counit value.
Corruption corrupt_one_coefficient(const CoproductSpec& s, std::mt19937_64& rng);

}  // namespace fpq::wba
