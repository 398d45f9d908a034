#pragma once

#include <cstdint>
#include <vector>

#include "fpq/representation.hpp"

namespace fpq {

/// One morphism: a dims(N)[v] x dims(M)[v] matrix per vertex.
using Morphism = std::vector<RationalMatrix>;

struct HomSpace {
  std::size_t dimension = 0;
  std::vector<Morphism> basis;
};

/// Basis of Hom(M, N): tuples (f_v) with f_t * M_a = N_a * f_s for every arrow
/// a : s -> t, from the exact nullspace of the assembled system.
HomSpace hom_space(const Representation& m, const Representation& n);

/// dim Hom(M, N) via rank-nullity; never materializes the basis.
std::size_t hom_dim(const Representation& m, const Representation& n);

/// Whether `f` is a morphism M -> N.
bool is_morphism(const Morphism& f, const Representation& m, const Representation& n);

/// <x, y>_Q = sum_v x_v y_v - sum_a x_{s(a)} y_{t(a)}.
std::int64_t euler_form(const DimensionVector& x, const DimensionVector& y, const Quiver& q);

/// dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>_Q (hereditary path algebra).
std::size_t dim_ext1(const Representation& m, const Representation& n);

/// dim Ext^1(M, N) as the cokernel of
///   (+)_v Hom(M_v, N_v) -> (+)_a Hom(M_s(a), N_t(a)),  (f_v) |-> f_t M_a - N_a f_s,
/// which comes from the standard projective resolution of M. Independent of
/// the Euler form.
std::size_t ext1_from_resolution(const Representation& m, const Representation& n);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };

/// Dims must agree and Hom(M, N) must contain an invertible element; tries each
/// basis element and then up to 32 seeded random combinations.
IsoVerdict isomorphism_test(const Representation& m, const Representation& n, std::uint64_t seed = 0);

}  // namespace fpq
