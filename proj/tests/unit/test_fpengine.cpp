#include <doctest.h>

#include <random>

#include "fpq/error.hpp"
#include "fpq/fpengine.hpp"
#include "fpq/hom.hpp"
#include "support/oracles.hpp"

using namespace fpq;
using namespace fpq::fp;

namespace {

const TensorStructure vw = TensorStructure::vertexwise();

double fpd(const std::string& word, type_a::Interval v, int shift) {
  const auto w = type_a::OrientationWord::parse(word);
  return fpd_exact(type_a::interval_rep(w, v), shift, vw, Universe::type_a(w)).value;
}

// Max rho over every brick set found by subset search, adjacency recomputed
// with the oracle Hom.
double brute_fpd(const type_a::OrientationWord& w, const Representation& m, int shift) {
  std::vector<Representation> reps;
  for (const auto& v : type_a::all_indecomposables(w)) reps.push_back(type_a::interval_rep(w, v));
  const auto sets = oracle::maximal_brick_subsets(reps, std::vector<int>(reps.size(), 0));
  double best = 0;
  for (const auto& s : sets) {
    spectral::NonnegIntMatrix a(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        a.set(i, j, BigInt(static_cast<unsigned long>(oracle::derived(reps[s[i]], 0, tensor_vertexwise(m, reps[s[j]]), shift))));
    best = std::max(best, oracle::spectral_radius(a));
  }
  return best;
}

}  // namespace

TEST_CASE("adjacency examples") {
  const auto q = share(kronecker_quiver(2));
  const auto m = random_representation(q, 3, 4);
  const auto a = adjacency({{simple(q, 1), 0, ""}}, m, 0, vw);
  CHECK(a(0, 0) == m.dim(1));
  CHECK(adjacency({{simple(q, 1), 0, ""}}, m, 3, vw).is_zero());
  const auto bands = bricks::kronecker_band_family(q).generate(2);
  CHECK(adjacency(bands, simple(q, 0), 0, vw) == spectral::NonnegIntMatrix::all_ones(2));
}

TEST_CASE("fpd examples") {
  CHECK(fpd("<>", {2, 2}, 0) == 2);
  CHECK(fpd("><", {2, 2}, 1) == 1);
  CHECK(fpd("><", {1, 3}, 2) == 0);
  CHECK(fpd("<>", {1, 3}, -1) == 0);
}

TEST_CASE("exact engine agrees with subset search on small orientations") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& w : type_a::OrientationWord::all(n)) {
      const auto u = Universe::type_a(w);
      for (const auto& v : type_a::all_indecomposables(w)) {
        const auto m = type_a::interval_rep(w, v);
        for (int s = 0; s <= 1; ++s) CHECK(fpd_exact(m, s, vw, u).value == doctest::Approx(brute_fpd(w, m, s)));
      }
      // Beyond intervals: a random non-indecomposable M.
      const auto m = random_representation(w.quiver(), 2, 100 + n);
      CHECK(fpd_exact(m, 0, vw, u).value == doctest::Approx(brute_fpd(w, m, 0)));
    }
}

TEST_CASE("mixed-shift brick sets change nothing") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& w : type_a::OrientationWord::all(n)) {
      std::vector<Representation> reps;
      for (const auto& v : type_a::all_indecomposables(w)) reps.push_back(type_a::interval_rep(w, v));
      const auto u = Universe::type_a(w);
      for (const auto& m : reps)
        for (int s = -2; s <= 3; ++s) {
          const double mixed = fpd_mixed_shifts(m, s, vw, reps, -1, 2);
          CHECK(mixed == doctest::Approx(fpd_exact(m, s, vw, u).value));
        }
    }
}

TEST_CASE("fpd is at least the largest vertex dimension") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const auto words = type_a::OrientationWord::all(2 + rng() % 3);
    const auto& w = words[rng() % words.size()];
    const auto m = random_representation(w.quiver(), 3, rng());
    const auto r = fpd_exact(m, 0, vw, Universe::type_a(w));
    CHECK(r.value + 1e-9 >= static_cast<double>(m.dims().max()));
    CHECK(r.mode == Mode::Exact);
    CHECK(r.field == "Q");
  }
}

TEST_CASE("universe input checks") {
  const auto w = type_a::OrientationWord::parse(">");
  const auto q = w.quiver();
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([&] { Universe({simple(q, 0), zero_representation(q)}); }) == ErrorCode::IncompleteList);
  CHECK(code([&] { Universe({simple(q, 0), direct_sum(simple(q, 0), simple(q, 1))}); }) == ErrorCode::IncompleteList);
  std::mt19937_64 rng(1);
  const auto m12 = unit_representation(q);
  CHECK(code([&] { Universe({m12, random_change_of_basis(m12, rng)}); }) == ErrorCode::IncompleteList);
  CHECK(code([&] { Universe::type_a(type_a::OrientationWord::parse(">>>"), 1); }) == ErrorCode::CapExceeded);
}

TEST_CASE("lower bound mode") {
  const auto q = share(kronecker_quiver(2));
  const auto r = fpd_lower_bound(simple(q, 0), 0, vw, {bricks::kronecker_band_family(q)}, 12);
  CHECK(r.mode == Mode::LowerBound);
  CHECK(r.divergent);
  CHECK(r.value == doctest::Approx(12));
  CHECK(r.family_values.size() == 12);
  // S(2) (x) M_c = S(2) only talks to S(2); no divergence.
  const auto r2 = fpd_lower_bound(simple(q, 1), 0, vw, {bricks::kronecker_band_family(q)}, 6);
  CHECK(!r2.divergent);
  // On finite type the lower bound never beats the exact value.
  const auto w = type_a::OrientationWord::parse("><>");
  for (const auto& v : type_a::all_indecomposables(w)) {
    const auto m = type_a::interval_rep(w, v);
    CHECK(fpd_lower_bound(m, 0, vw, {}, 4).value <= fpd_exact(m, 0, vw, Universe::type_a(w)).value + 1e-9);
  }
}

TEST_CASE("fpv") {
  const auto w = type_a::OrientationWord::parse(">>");
  CHECK(fpv_closed_form(type_a::interval_rep(w, {1, 3})) == 1);
  const auto q = w.quiver();
  const Representation m(q, {2, 5, 1}, {RationalMatrix(5, 2), RationalMatrix(1, 5)});
  CHECK(fpv_closed_form(m) == 5);
  CHECK(fpv_closed_form(zero_representation(q)) == 0);
  const auto seq = fpv_empirical(m, vw, 5);
  CHECK(seq.complete);
  for (double v : seq.max_values) CHECK(v == 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (double v : seq.per_vertex[i]) CHECK(v == static_cast<double>(m.dim(i)));
  const auto unit = fpv_empirical(unit_representation(q), vw, 4);
  for (double v : unit.max_values) CHECK(v == 1);
  const auto k2 = wba::catalog_k2();
  const auto ts = TensorStructure::from_wba(wba::WeakBialgebra::create(k2[0].spec, k2[0].name, k2[0].unit));
  CHECK_THROWS_AS(fpv_closed_form(simple(k2[0].spec.basis->quiver_ptr(), 0), ts), Error);
}
