#include <doctest.h>

#include <random>

#include "fpq/error.hpp"
#include "fpq/hom.hpp"
#include "fpq/io.hpp"
#include "fpq/linalg.hpp"
#include "support/oracles.hpp"

using namespace fpq;

namespace {

QuiverPtr a2() { return share(Quiver(2, {{"a1", 0, 1}})); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK(code_of([] { Quiver(2, {{"a", 0, 1}, {"b", 1, 0}}); }) == ErrorCode::CyclicQuiver);
  CHECK(code_of([] { Quiver(2, {{"a", 0, 0}}); }) == ErrorCode::CyclicQuiver);
  CHECK(code_of([] { Quiver(2, {{"a", 0, 2}}); }) == ErrorCode::BadArrow);
  CHECK(code_of([] { Quiver(3, {{"a", 0, 1}, {"a", 1, 2}}); }) == ErrorCode::DuplicateLabel);
  const Quiver k = kronecker_quiver(3);
  CHECK(k.arrow_count() == 3);
  CHECK(opposite(opposite(k)) == k);
  CHECK(opposite(k).arrow(0).source == 1);
}

TEST_CASE("representation shape checks") {
  CHECK(code_of([] { Representation(a2(), {1, 1}, {RationalMatrix(2, 1)}); }) == ErrorCode::BadShape);
  CHECK(code_of([] { Representation(a2(), {1}, {RationalMatrix(1, 1)}); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { Representation(a2(), {1, 1}, {}); }) == ErrorCode::BadShape);
}

TEST_CASE("hom on A2") {
  const auto q = a2();
  const auto s1 = simple(q, 0);
  const auto s2 = simple(q, 1);
  const auto p1 = unit_representation(q);  // M{1,2}
  CHECK(hom_dim(s1, s1) == 1);
  CHECK(hom_dim(s1, s2) == 0);
  CHECK(hom_dim(s2, p1) == 1);  // S(2) is the socle
  CHECK(hom_dim(p1, s1) == 1);  // S(1) is the top
  CHECK(hom_dim(p1, s2) == 0);
  // The nonsplit extension 0 -> S(2) -> M{1,2} -> S(1) -> 0.
  CHECK(dim_ext1(s1, s2) == 1);
  CHECK(dim_ext1(s2, s1) == 0);
  CHECK(ext1_from_resolution(s1, s2) == 1);
  CHECK(euler_form(s1.dims(), s2.dims(), *q) == -1);
}

TEST_CASE("hom and ext agree with the independent oracle on random data") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const auto q = share(random_acyclic_quiver(n, n + 2, rng));
    const auto m = random_representation(q, 3, rng());
    const auto x = random_representation(q, 3, rng());
    const auto h = hom_space(m, x);
    CHECK(h.dimension == oracle::hom_dim(m, x));
    CHECK(hom_dim(m, x) == h.dimension);
    for (const auto& f : h.basis) CHECK(is_morphism(f, m, x));
    CHECK(dim_ext1(m, x) == oracle::ext1(m, x));
    CHECK(ext1_from_resolution(m, x) == oracle::ext1(m, x));
  }
}

TEST_CASE("isomorphism test sees through a change of basis") {
  std::mt19937_64 rng(5);
  const auto q = share(kronecker_quiver(2));
  for (int t = 0; t < 10; ++t) {
    const auto m = random_representation(q, 3, rng());
    const auto m2 = random_change_of_basis(m, rng);
    CHECK(isomorphism_test(m, m2) == IsoVerdict::Isomorphic);
    CHECK(hom_dim(m, m2) == hom_dim(m, m));
  }
  CHECK(isomorphism_test(simple(q, 0), simple(q, 1)) == IsoVerdict::NotIsomorphic);
}

TEST_CASE("vertexwise tensor and duals") {
  std::mt19937_64 rng(9);
  const auto q = share(random_acyclic_quiver(4, 5, rng));
  const auto m = random_representation(q, 2, 1);
  const auto x = random_representation(q, 3, 2);
  const auto t = tensor_vertexwise(m, x);
  for (std::size_t v = 0; v < 4; ++v) CHECK(t.dim(v) == m.dim(v) * x.dim(v));
  for (std::size_t a = 0; a < q->arrow_count(); ++a) CHECK(t.map(a) == kron(m.map(a), x.map(a)));
  CHECK(tensor_vertexwise(unit_representation(q), x) == x);
  CHECK(dual(dual(m)) == m);
  CHECK(dual(m).quiver() == opposite(*q));
  // Hom(M, N) = Hom(N*, M*)
  CHECK(hom_dim(m, x) == hom_dim(dual(x), dual(m)));
  CHECK(code_of([&] { tensor_vertexwise(m, simple(a2(), 0)); }) == ErrorCode::QuiverMismatch);
}

TEST_CASE("direct sums add hom dimensions") {
  const auto q = a2();
  const auto s = direct_sum(simple(q, 0), unit_representation(q));
  CHECK(s.dims().components == std::vector<std::size_t>{2, 1});
  CHECK(hom_dim(s, s) == oracle::hom_dim(s, s));
  CHECK(hom_dim(s, s) == 3);
}

TEST_CASE("linear algebra basics") {
  RationalMatrix m(2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(linalg::rank(m) == 1);
  const auto k = linalg::nullspace(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  RationalMatrix inv(2, 2, {Rational(1, 2), 1, 0, 3});
  const auto i = linalg::inverse(inv);
  REQUIRE(i);
  CHECK(inv * *i == RationalMatrix::identity(2));
  CHECK(!linalg::inverse(RationalMatrix(2, 2, {1, 2, 2, 4})));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
}

TEST_CASE("JSON round trips and errors") {
  const auto q = share(kronecker_quiver(2));
  const auto m = random_representation(q, 2, 77);
  CHECK(io::quiver_from_json(io::to_json(*q)) == *q);
  CHECK(io::representation_from_json(io::to_json(m)) == m);
  const auto j = io::parse_json_text(R"({"vertices": 2, "arrows": [{"id": "a", "from": 1, "to": 3}]})", "inline");
  CHECK(code_of([&] { io::quiver_from_json(j); }) == ErrorCode::BadArrow);
  try {
    io::parse_json_text("{\"vertices\": 2,,}", "bad.json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK(io::number(2.0).is_number_integer());
  CHECK(io::number(1.0 / 3).dump() == "0.333333333333");
}
