#include <doctest.h>

#include <random>

#include "fpq/bricks.hpp"
#include "fpq/error.hpp"
#include "fpq/hom.hpp"
#include "fpq/type_a.hpp"
#include "support/oracles.hpp"

using namespace fpq;
using namespace fpq::bricks;

namespace {

std::vector<DerivedObject> intervals(const type_a::OrientationWord& w, int shift = 0) {
  std::vector<DerivedObject> out;
  for (const auto& v : type_a::all_indecomposables(w)) out.push_back({type_a::interval_rep(w, v), shift, type_a::label(v)});
  return out;
}

}  // namespace

TEST_CASE("derived hom on A2") {
  const auto w = type_a::OrientationWord::parse(">");
  const auto q = w.quiver();
  const auto m12 = type_a::interval_rep(w, {1, 2});
  CHECK(derived_hom_dim({m12, 0, ""}, {m12, 0, ""}) == 1);
  CHECK(derived_hom_dim(m12, 0, m12, 2) == 0);
  CHECK(derived_hom_dim(m12, 0, m12, -1) == 0);
  // Ext^1 is nonzero from the top S(1) to the socle S(2).
  CHECK(derived_hom_dim(simple(q, 0), 0, simple(q, 1), 1) == 1);
  CHECK(derived_hom_dim(simple(q, 1), 0, simple(q, 0), 1) == 0);
  for (int s = -3; s <= 3; ++s) CHECK(derived_hom_dim(m12, s, simple(q, 0), s) == 1);
}

TEST_CASE("brick set predicates") {
  const auto w = type_a::OrientationWord::parse(">");
  const auto objs = intervals(w);  // M{1,1}, M{1,2}, M{2,2}
  CHECK(is_brick_set({objs[0], objs[2]}));
  CHECK(!is_brick_set({objs[0], objs[1]}));
  CHECK(is_brick_set({objs[1]}));
  const auto c = check_brick_set({objs[0], objs[1]});
  CHECK(!c.ok);
  CHECK(c.certificate(1, 0) == 1);
  CHECK(!is_brick(direct_sum(objs[0].rep, objs[2].rep)));
  CHECK(is_connected_brick_set({{simple(w.quiver(), 0), 0, ""}}) == false);
  CHECK_THROWS_AS(is_brick_set({objs[0], {simple(share(kronecker_quiver(2)), 0), 0, ""}}), Error);
}

TEST_CASE("maximal brick sets match subset enumeration") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& w : type_a::OrientationWord::all(n)) {
      for (int mixed = 0; mixed <= 1; ++mixed) {
        std::vector<DerivedObject> cand = intervals(w);
        if (mixed)
          for (auto& x : intervals(w, 1)) cand.push_back(x);
        if (cand.size() > 16) continue;
        std::vector<Representation> reps;
        std::vector<int> shifts;
        for (const auto& x : cand) {
          reps.push_back(x.rep);
          shifts.push_back(x.shift);
        }
        const auto want = oracle::maximal_brick_subsets(reps, shifts);
        const auto graph = compatibility_graph(cand);
        const auto got = maximal_cliques(graph.adjacent);
        CHECK(got.complete);
        std::vector<std::vector<std::size_t>> mapped;
        for (const auto& c : got.cliques) {
          std::vector<std::size_t> m;
          for (auto k : c) m.push_back(graph.nodes[k]);
          std::sort(m.begin(), m.end());
          mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == want);
        for (const auto& b : maximal_brick_sets(cand).sets) CHECK(is_brick_set(b.members));
      }
    }
  CHECK(maximal_brick_sets({}).sets.empty());
}

TEST_CASE("clique search on known graphs") {
  // A 5-cycle has its five edges as maximal cliques.
  std::vector<std::vector<bool>> c5(5, std::vector<bool>(5, false));
  for (std::size_t i = 0; i < 5; ++i) c5[i][(i + 1) % 5] = c5[(i + 1) % 5][i] = true;
  CHECK(maximal_cliques(c5).cliques.size() == 5);
  const auto capped = maximal_cliques(c5, 2);
  CHECK(!capped.complete);
  CHECK(capped.cliques.size() == 2);
  std::vector<std::vector<bool>> k4(4, std::vector<bool>(4, true));
  for (std::size_t i = 0; i < 4; ++i) k4[i][i] = false;
  CHECK(maximal_cliques(k4).cliques == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
}

TEST_CASE("Kronecker bands") {
  const auto q = share(kronecker_quiver(2));
  const auto m1 = band_kronecker(q, 1);
  const auto m2 = band_kronecker(q, 2);
  CHECK(is_brick_set({{m1, 0, ""}, {m2, 0, ""}}));
  CHECK(hom_dim(m1, simple(q, 0)) == 1);
  CHECK(hom_dim(m1, band_kronecker(q, 1)) == 1);
  CHECK(band_kronecker(Rational(3)) == band_kronecker(q, 3));
  CHECK_THROWS_AS(band_kronecker(share(kronecker_quiver(3)), 1), Error);
  CHECK(band_two_paths(q, {"a1"}, {"a2"}, 5) == band_kronecker(q, 5));
  const auto fam = kronecker_band_family(q);
  CHECK(is_brick_set(fam.generate(8)));
}

TEST_CASE("two-path bands") {
  // 1 -> 2 -> 4 and 1 -> 3 -> 4.
  const auto q = share(Quiver(4, {{"a", 0, 1}, {"b", 1, 3}, {"c", 0, 2}, {"d", 2, 3}}));
  const auto fam = two_path_band_family(q, {"a", "b"}, {"c", "d"});
  CHECK(is_brick_set(fam.generate(5)));
  auto code = [&](std::vector<std::string> p1, std::vector<std::string> p2) {
    try {
      band_two_paths(q, p1, p2, 1);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code({"a", "b"}, {"c"}) == ErrorCode::BadPaths);
  CHECK(code({"a", "x"}, {"c", "d"}) == ErrorCode::BadPaths);
  CHECK(code({"b", "a"}, {"c", "d"}) == ErrorCode::BadPaths);
  // Shared interior vertex: 1 -> 2 -> 3 -> 4 two ways through vertex 3.
  const auto q2 = share(Quiver(4, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 3}, {"d", 0, 2}, {"e", 2, 3}}));
  try {
    band_two_paths(q2, {"a", "b", "c"}, {"d", "e"}, 1);
    FAIL("expected BadPaths");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadPaths);
  }
}

TEST_CASE("principal submatrices never raise rho") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 5;
    spectral::NonnegIntMatrix a(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a.set(r, c, BigInt(static_cast<long>(rng() % 3)));
    std::vector<std::size_t> sub;
    for (std::size_t k = 0; k < n; ++k)
      if (rng() & 1) sub.push_back(k);
    CHECK(spectral::spectral_radius(a.principal_submatrix(sub)) <= spectral::spectral_radius(a) + 1e-9);
  }
}
