#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace fpq {

/// Arrow endpoints are 0-based vertex indices; the JSON form is 1-based.
struct Arrow {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite acyclic quiver. Construction validates, so every Quiver value is
/// acyclic with unique arrow labels and in-range endpoints.
class Quiver {
 public:
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const Arrow& arrow(std::size_t k) const { return arrows_.at(k); }
  /// Index of the arrow with this label, or arrow_count() if absent.
  std::size_t find_arrow(const std::string& id) const;
  /// A topological order of the vertices.
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> topo_;
};

/// Throws CyclicQuiver, BadArrow or DuplicateLabel; checks vertex_count >= 1.
void validate_quiver(std::size_t vertex_count, const std::vector<Arrow>& arrows);

/// Same vertices, every arrow reversed, labels kept.
Quiver opposite(const Quiver& q);

/// Two vertices and w parallel arrows a1..aw from vertex 1 to vertex 2.
Quiver kronecker_quiver(std::size_t w);

/// n vertices and up to max_arrows arrows (parallel arrows allowed), acyclic
/// by construction.
Quiver random_acyclic_quiver(std::size_t n, std::size_t max_arrows, std::mt19937_64& rng);

}  // namespace fpq
