#include "fpq/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fpq/error.hpp"

namespace fpq {

namespace {

// Kahn's algorithm; returns fewer than n vertices iff there is a directed cycle.
std::vector<std::size_t> kahn_order(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& a : arrows) {
    ++indegree[a.target];
    out[a.source].push_back(a.target);
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t v = n; v-- > 0;)
    if (indegree[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (auto w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return order;
}

}  // namespace

void validate_quiver(std::size_t vertex_count, const std::vector<Arrow>& arrows) {
  if (vertex_count == 0) throw Error(ErrorCode::BadArrow, "quiver needs at least one vertex");
  std::set<std::string> labels;
  for (const auto& a : arrows) {
    if (a.source >= vertex_count || a.target >= vertex_count)
      throw Error(ErrorCode::BadArrow, "arrow '" + a.id + "' has an endpoint outside 1.." +
                                           std::to_string(vertex_count));
    if (a.id.empty()) throw Error(ErrorCode::BadArrow, "arrow with empty label");
    if (!labels.insert(a.id).second)
      throw Error(ErrorCode::DuplicateLabel, "duplicate arrow label '" + a.id + "'");
  }
  if (kahn_order(vertex_count, arrows).size() != vertex_count)
    throw Error(ErrorCode::CyclicQuiver, "quiver contains a directed cycle");
}

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  validate_quiver(vertex_count_, arrows_);
  topo_ = kahn_order(vertex_count_, arrows_);
}

std::size_t Quiver::find_arrow(const std::string& id) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k)
    if (arrows_[k].id == id) return k;
  return arrows_.size();
}

Quiver opposite(const Quiver& q) {
  std::vector<Arrow> reversed;
  reversed.reserve(q.arrow_count());
  for (const auto& a : q.arrows()) reversed.push_back({a.id, a.target, a.source});
  return Quiver(q.vertex_count(), std::move(reversed));
}

Quiver kronecker_quiver(std::size_t w) {
  std::vector<Arrow> arrows;
  for (std::size_t k = 1; k <= w; ++k) arrows.push_back({"a" + std::to_string(k), 0, 1});
  return Quiver(2, std::move(arrows));
}

Quiver random_acyclic_quiver(std::size_t n, std::size_t max_arrows, std::mt19937_64& rng) {
  // Arrows only go forward along a random vertex order, so no cycle can form.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Arrow> arrows;
  if (n >= 2) {
    const std::size_t count = std::uniform_int_distribution<std::size_t>(0, max_arrows)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t a = pick(rng), b = pick(rng);
      while (b == a) b = pick(rng);
      if (a > b) std::swap(a, b);
      arrows.push_back({"a" + std::to_string(k + 1), order[a], order[b]});
    }
  }
  return Quiver(n, std::move(arrows));
}

}  // namespace fpq
