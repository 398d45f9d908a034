#include "fpq/representation.hpp"

#include <algorithm>
#include <numeric>

#include "fpq/error.hpp"
#include "fpq/linalg.hpp"

namespace fpq {

std::size_t DimensionVector::total() const noexcept {
  return std::accumulate(components.begin(), components.end(), std::size_t{0});
}

std::size_t DimensionVector::max() const noexcept {
  return components.empty() ? 0 : *std::max_element(components.begin(), components.end());
}

DimensionVector operator+(const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "dimension vector length mismatch");
  DimensionVector out{a.components};
  for (std::size_t v = 0; v < b.size(); ++v) out.components[v] += b[v];
  return out;
}

Representation::Representation(QuiverPtr quiver, std::vector<std::size_t> dims, std::vector<RationalMatrix> maps)
    : quiver_(std::move(quiver)), dims_{std::move(dims)}, maps_(std::move(maps)) {
  if (!quiver_) throw Error(ErrorCode::BadShape, "representation without quiver");
  if (dims_.size() != quiver_->vertex_count())
    throw Error(ErrorCode::LengthMismatch, "dimension vector has " + std::to_string(dims_.size()) +
                                               " entries, quiver has " +
                                               std::to_string(quiver_->vertex_count()) + " vertices");
  if (maps_.size() != quiver_->arrow_count())
    throw Error(ErrorCode::BadShape, "one matrix per arrow required");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    const Arrow& a = quiver_->arrow(k);
    if (maps_[k].rows() != dims_[a.target] || maps_[k].cols() != dims_[a.source])
      throw Error(ErrorCode::BadShape, "map of arrow '" + a.id + "' must be " +
                                           std::to_string(dims_[a.target]) + "x" +
                                           std::to_string(dims_[a.source]));
  }
}

bool operator==(const Representation& a, const Representation& b) {
  return (a.quiver_ == b.quiver_ || *a.quiver_ == *b.quiver_) && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

void require_same_quiver(const Representation& a, const Representation& b) {
  if (a.quiver_ptr() != b.quiver_ptr() && !(a.quiver() == b.quiver()))
    throw Error(ErrorCode::QuiverMismatch, "representations live on different quivers");
}

namespace {

std::vector<RationalMatrix> zero_maps(const Quiver& q, const std::vector<std::size_t>& dims) {
  std::vector<RationalMatrix> maps;
  maps.reserve(q.arrow_count());
  for (const auto& a : q.arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  return maps;
}

}  // namespace

Representation zero_representation(const QuiverPtr& q) {
  std::vector<std::size_t> dims(q->vertex_count(), 0);
  return {q, dims, zero_maps(*q, dims)};
}

Representation simple(const QuiverPtr& q, std::size_t vertex) {
  if (vertex >= q->vertex_count()) throw Error(ErrorCode::BadArrow, "simple at unknown vertex");
  std::vector<std::size_t> dims(q->vertex_count(), 0);
  dims[vertex] = 1;
  return {q, dims, zero_maps(*q, dims)};
}

Representation thin_representation(const QuiverPtr& q, const std::vector<bool>& support) {
  if (support.size() != q->vertex_count()) throw Error(ErrorCode::LengthMismatch, "support length mismatch");
  std::vector<std::size_t> dims(q->vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = support[v] ? 1 : 0;
  auto maps = zero_maps(*q, dims);
  for (std::size_t k = 0; k < q->arrow_count(); ++k) {
    const Arrow& a = q->arrow(k);
    if (support[a.source] && support[a.target]) maps[k](0, 0) = 1;
  }
  return {q, dims, std::move(maps)};
}

Representation unit_representation(const QuiverPtr& q) {
  return thin_representation(q, std::vector<bool>(q->vertex_count(), true));
}

Representation direct_sum(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  std::vector<std::size_t> dims = (m.dims() + n.dims()).components;
  std::vector<RationalMatrix> maps;
  for (std::size_t k = 0; k < m.quiver().arrow_count(); ++k) maps.push_back(block_diagonal(m.map(k), n.map(k)));
  return {m.quiver_ptr(), std::move(dims), std::move(maps)};
}

Representation tensor_vertexwise(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  std::vector<std::size_t> dims(m.quiver().vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = m.dim(v) * n.dim(v);
  std::vector<RationalMatrix> maps;
  for (std::size_t k = 0; k < m.quiver().arrow_count(); ++k) maps.push_back(kron(m.map(k), n.map(k)));
  return {m.quiver_ptr(), std::move(dims), std::move(maps)};
}

Representation dual(const Representation& m) {
  std::vector<RationalMatrix> maps;
  for (const auto& f : m.maps()) maps.push_back(f.transpose());
  return {share(opposite(m.quiver())), m.dims().components, std::move(maps)};
}

Representation random_representation(const QuiverPtr& q, std::size_t max_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim_dist(0, max_dim);
  std::uniform_int_distribution<int> entry_dist(-2, 2);
  std::vector<std::size_t> dims(q->vertex_count());
  for (auto& d : dims) d = dim_dist(rng);
  std::vector<RationalMatrix> maps;
  for (const auto& a : q->arrows()) {
    RationalMatrix f(dims[a.target], dims[a.source]);
    for (std::size_t r = 0; r < f.rows(); ++r)
      for (std::size_t c = 0; c < f.cols(); ++c) f(r, c) = entry_dist(rng);
    maps.push_back(std::move(f));
  }
  return {q, std::move(dims), std::move(maps)};
}

RationalMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  RationalMatrix lower = RationalMatrix::identity(n);
  RationalMatrix upper = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = dist(rng);
      upper(j, i) = dist(rng);
    }
  return lower * upper;
}

Representation random_change_of_basis(const Representation& m, std::mt19937_64& rng) {
  const Quiver& q = m.quiver();
  std::vector<RationalMatrix> basis, inverse_basis;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    basis.push_back(random_invertible(m.dim(v), rng));
    inverse_basis.push_back(*linalg::inverse(basis.back()));
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    maps.push_back(basis[a.target] * m.map(k) * inverse_basis[a.source]);
  }
  return {m.quiver_ptr(), m.dims().components, std::move(maps)};
}

}  // namespace fpq
