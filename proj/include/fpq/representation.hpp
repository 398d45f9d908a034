#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "fpq/matrix.hpp"
#include "fpq/quiver.hpp"

namespace fpq {

/// Per-vertex dimensions of a representation.
struct DimensionVector {
  std::vector<std::size_t> components;

  std::size_t size() const noexcept { return components.size(); }
  std::size_t operator[](std::size_t v) const { return components.at(v); }
  std::size_t total() const noexcept;
  std::size_t max() const noexcept;

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

DimensionVector operator+(const DimensionVector& a, const DimensionVector& b);

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr share(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

/// A finite-dimensional representation: vector space k^dims[v] at each vertex
/// and a dims[t] x dims[s] matrix for each arrow s -> t, in quiver arrow order.
class Representation {
 public:
  Representation(QuiverPtr quiver, std::vector<std::size_t> dims, std::vector<RationalMatrix> maps);

  const Quiver& quiver() const noexcept { return *quiver_; }
  const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
  const DimensionVector& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t vertex) const { return dims_[vertex]; }
  std::size_t total_dim() const noexcept { return dims_.total(); }
  const std::vector<RationalMatrix>& maps() const noexcept { return maps_; }
  const RationalMatrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  bool is_zero() const noexcept { return total_dim() == 0; }

  /// Exact equality of data; quivers compared structurally.
  friend bool operator==(const Representation& a, const Representation& b);

 private:
  QuiverPtr quiver_;
  DimensionVector dims_;
  std::vector<RationalMatrix> maps_;
};

/// Throws QuiverMismatch unless both live on structurally equal quivers.
void require_same_quiver(const Representation& a, const Representation& b);

Representation zero_representation(const QuiverPtr& q);
Representation simple(const QuiverPtr& q, std::size_t vertex);
/// k at every vertex, identity on every arrow.
Representation unit_representation(const QuiverPtr& q);
/// Thin representation on `support` with identity maps between supported
/// endpoints and zero elsewhere.
Representation thin_representation(const QuiverPtr& q, const std::vector<bool>& support);

Representation direct_sum(const Representation& m, const Representation& n);

/// Vertex-wise tensor: dims multiply, arrow maps are Kronecker products with
/// the basis index of `m` varying slowest.
Representation tensor_vertexwise(const Representation& m, const Representation& n);

/// Representation of the opposite quiver with transposed maps.
Representation dual(const Representation& m);

/// Deterministic per seed: dims uniform in [0, max_dim], entries uniform in [-2, 2].
Representation random_representation(const QuiverPtr& q, std::size_t max_dim, std::uint64_t seed);

/// Conjugates M by random invertible integer matrices at every vertex,
/// producing an isomorphic representation.
Representation random_change_of_basis(const Representation& m, std::mt19937_64& rng);

/// Random invertible n x n integer matrix (product of unit triangular factors).
RationalMatrix random_invertible(std::size_t n, std::mt19937_64& rng);

}  // namespace fpq
