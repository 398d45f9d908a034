#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fpq/representation.hpp"
#include "fpq/spectral.hpp"

namespace fpq::bricks {

/// A representation placed in degree `shift` of the bounded derived category.
struct DerivedObject {
  Representation rep;
  int shift = 0;
  std::string label;  // display only
};

/// Hereditary derived Hom: Hom when shifts agree, Ext^1 when Y sits one
/// degree higher, zero otherwise.
std::size_t derived_hom_dim(const DerivedObject& x, const DerivedObject& y);

/// Same, with Y = (rep_y, shift_y) given by parts.
std::size_t derived_hom_dim(const Representation& x, int shift_x, const Representation& y, int shift_y);

struct BrickSet {
  std::vector<DerivedObject> members;
  /// certificate(i, j) = derived dim Hom(X_i, X_j).
  spectral::NonnegIntMatrix certificate;
};

struct BrickSetCheck {
  bool ok = false;
  spectral::NonnegIntMatrix certificate;
};

bool is_brick(const DerivedObject& x);
bool is_brick(const Representation& x);
BrickSetCheck check_brick_set(const std::vector<DerivedObject>& members);
bool is_brick_set(const std::vector<DerivedObject>& members);

/// Brick set whose members pairwise (and individually) have nonzero Ext^1.
bool is_connected_brick_set(const std::vector<DerivedObject>& members);

/// Undirected graph on candidate indices; edge iff Hom vanishes both ways.
struct CompatibilityGraph {
  std::vector<std::size_t> nodes;  // indices into the candidate list, bricks only
  std::vector<std::vector<bool>> adjacent;  // over positions in `nodes`
};

CompatibilityGraph compatibility_graph(const std::vector<DerivedObject>& candidates);

struct CliqueResult {
  std::vector<std::vector<std::size_t>> cliques;  // sorted member lists, sorted
  bool complete = true;                           // false when the cap was hit
};

inline constexpr std::size_t kDefaultCliqueCap = 1000000;

/// All maximal cliques of an undirected graph (pivoting Bron-Kerbosch,
/// vertices in index order). Stops after `cap` cliques with complete = false.
CliqueResult maximal_cliques(const std::vector<std::vector<bool>>& adjacent, std::size_t cap = kDefaultCliqueCap);

struct MaximalBrickSets {
  std::vector<BrickSet> sets;
  bool complete = true;
};

/// Maximal brick sets among the candidates (non-bricks are dropped).
MaximalBrickSets maximal_brick_sets(const std::vector<DerivedObject>& candidates,
                                    std::size_t cap = kDefaultCliqueCap);

/// Band module of a Kronecker-type quiver with two arrows: first arrow 1,
/// second arrow c. Throws WrongQuiver otherwise.
Representation band_kronecker(const QuiverPtr& q, const Rational& c);
Representation band_kronecker(const Rational& c);

/// Band on two directed paths p1, p2 (arrow labels in traversal order) that
/// share only their endpoints: k on every path vertex, identity on path
/// arrows except the first arrow of p2, which carries c.
Representation band_two_paths(const QuiverPtr& q, const std::vector<std::string>& p1,
                              const std::vector<std::string>& p2, const Rational& c);

/// Generator of an infinite brick family; `generate(k)` returns k members.
struct BrickFamily {
  std::string name;
  std::function<std::vector<DerivedObject>(std::size_t)> generate;
};

/// {M_c : c = 1..k} on the 2-arrow Kronecker quiver `q`.
BrickFamily kronecker_band_family(const QuiverPtr& q);
BrickFamily two_path_band_family(const QuiverPtr& q, std::vector<std::string> p1, std::vector<std::string> p2);

}  // namespace fpq::bricks
