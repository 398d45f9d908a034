#include "fpq/hom.hpp"

#include <random>

#include "fpq/error.hpp"
#include "fpq/linalg.hpp"

namespace fpq {

namespace {

struct HomSystem {
  std::vector<std::size_t> offsets;  // unknown offset of f_v
  std::size_t unknowns = 0;
  RationalMatrix equations;
};

HomSystem assemble(const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  const Quiver& q = m.quiver();
  HomSystem sys;
  sys.offsets.resize(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    sys.offsets[v] = sys.unknowns;
    sys.unknowns += n.dim(v) * m.dim(v);
  }
  std::size_t rows = 0;
  for (const auto& a : q.arrows()) rows += n.dim(a.target) * m.dim(a.source);
  sys.equations = RationalMatrix(rows, rows == 0 ? 0 : sys.unknowns);
  if (rows == 0) return sys;

  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    const std::size_t s = a.source, t = a.target;
    const RationalMatrix& ma = m.map(k);
    const RationalMatrix& na = n.map(k);
    // (f_t * M_a - N_a * f_s)[r][c] = 0 for r < dim N_t, c < dim M_s.
    for (std::size_t r = 0; r < n.dim(t); ++r)
      for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
        for (std::size_t j = 0; j < m.dim(t); ++j)
          if (sgn(ma(j, c)) != 0) sys.equations(row, sys.offsets[t] + r * m.dim(t) + j) += ma(j, c);
        for (std::size_t j = 0; j < n.dim(s); ++j)
          if (sgn(na(r, j)) != 0) sys.equations(row, sys.offsets[s] + j * m.dim(s) + c) -= na(r, j);
      }
  }
  return sys;
}

}  // namespace

HomSpace hom_space(const Representation& m, const Representation& n) {
  const HomSystem sys = assemble(m, n);
  RationalMatrix kernel;
  if (sys.equations.rows() == 0) {
    kernel = RationalMatrix::identity(sys.unknowns);
  } else {
    kernel = linalg::nullspace(sys.equations);
  }
  HomSpace out;
  out.dimension = kernel.cols();
  const Quiver& q = m.quiver();
  for (std::size_t b = 0; b < kernel.cols(); ++b) {
    Morphism f;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      RationalMatrix fv(n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < fv.rows(); ++r)
        for (std::size_t c = 0; c < fv.cols(); ++c) fv(r, c) = kernel(sys.offsets[v] + r * fv.cols() + c, b);
      f.push_back(std::move(fv));
    }
    out.basis.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  const HomSystem sys = assemble(m, n);
  if (sys.equations.rows() == 0) return sys.unknowns;
  return sys.unknowns - linalg::rank(sys.equations);
}

std::size_t ext1_from_resolution(const Representation& m, const Representation& n) {
  const HomSystem sys = assemble(m, n);
  if (sys.equations.rows() == 0) return 0;
  return sys.equations.rows() - linalg::rank(sys.equations);
}

bool is_morphism(const Morphism& f, const Representation& m, const Representation& n) {
  require_same_quiver(m, n);
  const Quiver& q = m.quiver();
  if (f.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (f[v].rows() != n.dim(v) || f[v].cols() != m.dim(v)) return false;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrow(k);
    if (!(f[a.target] * m.map(k) == n.map(k) * f[a.source])) return false;
  }
  return true;
}

std::int64_t euler_form(const DimensionVector& x, const DimensionVector& y, const Quiver& q) {
  if (x.size() != q.vertex_count() || y.size() != q.vertex_count())
    throw Error(ErrorCode::LengthMismatch, "dimension vectors must have one entry per vertex");
  std::int64_t value = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    value += static_cast<std::int64_t>(x[v]) * static_cast<std::int64_t>(y[v]);
  for (const auto& a : q.arrows())
    value -= static_cast<std::int64_t>(x[a.source]) * static_cast<std::int64_t>(y[a.target]);
  return value;
}

std::size_t dim_ext1(const Representation& m, const Representation& n) {
  const auto hom = static_cast<std::int64_t>(hom_dim(m, n));
  const std::int64_t ext = hom - euler_form(m.dims(), n.dims(), m.quiver());
  if (ext < 0) throw Error(ErrorCode::BadShape, "negative Ext dimension: Hom solver inconsistent");
  return static_cast<std::size_t>(ext);
}

namespace {

bool invertible_morphism(const Morphism& f) {
  for (const auto& fv : f)
    if (!linalg::is_invertible(fv)) return false;
  return true;
}

}  // namespace

IsoVerdict isomorphism_test(const Representation& m, const Representation& n, std::uint64_t seed) {
  require_same_quiver(m, n);
  if (!(m.dims() == n.dims())) return IsoVerdict::NotIsomorphic;
  if (m.is_zero()) return IsoVerdict::Isomorphic;
  const HomSpace hom = hom_space(m, n);
  if (hom.dimension == 0) return IsoVerdict::NotIsomorphic;
  for (const auto& f : hom.basis)
    if (invertible_morphism(f)) return IsoVerdict::Isomorphic;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Morphism combo;
    for (const auto& fv : hom.basis.front()) combo.emplace_back(fv.rows(), fv.cols());
    for (const auto& f : hom.basis) {
      const Rational c = coef(rng);
      for (std::size_t v = 0; v < combo.size(); ++v) combo[v] = combo[v] + scaled(f[v], c);
    }
    if (invertible_morphism(combo)) return IsoVerdict::Isomorphic;
  }
  return IsoVerdict::Undecided;
}

}  // namespace fpq
