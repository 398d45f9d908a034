#include <doctest.h>

#include "fpq/error.hpp"
#include "fpq/hom.hpp"
#include "fpq/type_a.hpp"
#include "support/oracles.hpp"

using namespace fpq;
using namespace fpq::type_a;

TEST_CASE("orientation words") {
  const auto w = OrientationWord::parse("><");
  CHECK(w.n() == 3);
  CHECK(w.str() == "><");
  CHECK(w.quiver()->arrow(0).source == 0);
  CHECK(w.quiver()->arrow(0).target == 1);
  CHECK(w.quiver()->arrow(1).source == 2);
  CHECK(w.reversed().str() == "<>");
  CHECK(*w.reversed().quiver() == opposite(*w.quiver()));
  CHECK(OrientationWord::all(4).size() == 8);
  CHECK(OrientationWord::all(1).size() == 1);
  CHECK_THROWS_AS(OrientationWord::parse(">x"), Error);
}

TEST_CASE("interval modules are the indecomposables") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& w : OrientationWord::all(n)) {
      const auto list = all_indecomposables(w);
      CHECK(list.size() == n * (n + 1) / 2);
      for (const auto& v : list) {
        const auto m = interval_rep(w, v);
        CHECK(hom_dim(m, m) == 1);
        for (std::size_t k = 1; k <= n; ++k) CHECK(m.dim(k - 1) == (v.i <= k && k <= v.j ? 1u : 0u));
      }
    }
  const auto w = OrientationWord::parse(">>");
  try {
    interval_rep(w, {3, 2});
    FAIL("expected BadInterval");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadInterval);
  }
  CHECK_THROWS_AS(interval_rep(w, {1, 4}), Error);
}

TEST_CASE("classification") {
  // 1 <- 2 -> 3: M{2,2} is a source, M{1,1} and M{3,3} sinks.
  const auto w = OrientationWord::parse("<>");
  CHECK(classify(w, {2, 2}) == IntervalKind::Source);
  CHECK(classify(w, {1, 1}) == IntervalKind::Sink);
  CHECK(classify(w, {1, 2}) == IntervalKind::Source);
  CHECK(classify(OrientationWord::parse("<<"), {2, 2}) == IntervalKind::Flow);
  CHECK(classify(OrientationWord::parse(">>"), {2, 2}) == IntervalKind::Flow);
  // M{1,n} satisfies both boundary conditions; the tie goes to Sink.
  CHECK(satisfied_kinds(w, {1, 3}).size() == 2);
  CHECK(classify(w, {1, 3}) == IntervalKind::Sink);
}

TEST_CASE("closed form matches an independent transcription") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& w : OrientationWord::all(n))
      for (const auto& v : all_indecomposables(w))
        for (int s = -3; s <= 4; ++s) CHECK(closed_form_fpd(w, v, s) == oracle::closed_form(w.str(), v.i, v.j, s));
}

TEST_CASE("closed form values") {
  CHECK(closed_form_fpd(OrientationWord::parse("<>"), {2, 2}, 0) == 2);
  CHECK(closed_form_fpd(OrientationWord::parse("><"), {2, 2}, 1) == 1);
  CHECK(closed_form_fpd(OrientationWord::parse("><"), {2, 2}, 2) == 0);
  CHECK(closed_form_fpd(OrientationWord::parse("<>"), {2, 2}, 1) == 0);
  // Ties at i = 1, j = n give the same value under either kind.
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& w : OrientationWord::all(n))
      for (int s = 0; s <= 1; ++s)
        CHECK(closed_form_fpd(w, {1, n}, s, IntervalKind::Sink) == closed_form_fpd(w, {1, n}, s, IntervalKind::Source));
}

TEST_CASE("successor order from Hom") {
  const auto w = OrientationWord::parse(">");
  // Hom(M{1,2}, S(1)) = k, Hom(S(1), M{1,2}) = 0.
  CHECK(succ_order(w, {1, 2}, {1, 1}) == SuccOrder::V1BeatsV2);
  CHECK(succ_order(w, {1, 1}, {1, 2}) == SuccOrder::V2BeatsV1);
  CHECK(succ_order(w, {1, 1}, {2, 2}) == SuccOrder::BrickPair);
  CHECK(succ_order(w, {1, 1}, {1, 1}) == SuccOrder::Equal);
}
