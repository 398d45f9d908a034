#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fpq/cli.hpp"
#include "fpq/error.hpp"
#include "fpq/fpengine.hpp"
#include "fpq/hom.hpp"
#include "fpq/io.hpp"
#include "fpq/parallel.hpp"

namespace fpq::cli {

using nlohmann::json;

namespace {

class Params {
 public:
  explicit Params(const json& given) : given_(given.is_object() ? given : json::object()) {}

  template <class T>
  T get(const std::string& key, T fallback) {
    T value = given_.contains(key) ? given_.at(key).get<T>() : fallback;
    effective_[key] = value;
    return value;
  }
  const json& effective() const { return effective_; }

 private:
  json given_;
  json effective_ = json::object();
};

using Cases = std::vector<json>;

json finish(const std::string& name, const Params& p, Cases cases, json extra = json::object()) {
  std::sort(cases.begin(), cases.end(),
            [](const json& a, const json& b) { return a.at("case").get<std::string>() < b.at("case").get<std::string>(); });
  std::size_t passed = 0;
  for (const auto& c : cases) passed += c.at("pass").get<bool>() ? 1 : 0;
  json out = {{"suite", name},
              {"params", p.effective()},
              {"cases", cases},
              {"passed", passed},
              {"failed", cases.size() - passed},
              {"ok", passed == cases.size()}};
  for (auto& [k, v] : extra.items()) out[k] = v;
  return out;
}

std::string pad(std::size_t v, int width = 2) {
  std::ostringstream s;
  s.width(width);
  s.fill('0');
  s << v;
  return s.str();
}

std::string shift_text(int s) { return (s < 0 ? "-" : "+") + std::to_string(std::abs(s)); }

// Runs `body(i)` for each i and gathers the produced cases in index order.
Cases collect(std::size_t n, const std::function<Cases(std::size_t)>& body) {
  std::vector<Cases> parts(n);
  parallel_for(n, [&](std::size_t i) { parts[i] = body(i); });
  Cases out;
  for (auto& p : parts)
    for (auto& c : p) out.push_back(std::move(c));
  return out;
}

json theorem08(Params& p) {
  const auto n_max = p.get<std::size_t>("n", 4);
  const auto n_min = p.get<std::size_t>("n_min", n_max);
  if (n_min < 2 || n_max < n_min) throw Error(ErrorCode::BadShape, "theorem0.8 needs 2 <= n_min <= n");
  std::vector<type_a::OrientationWord> words;
  for (std::size_t n = n_min; n <= n_max; ++n)
    for (auto& w : type_a::OrientationWord::all(n)) words.push_back(w);
  const auto vw = fp::TensorStructure::vertexwise();
  Cases cases = collect(words.size(), [&](std::size_t k) {
    const auto& w = words[k];
    const auto u = fp::Universe::type_a(w);
    Cases out;
    for (const auto& v : type_a::all_indecomposables(w)) {
      const Representation m = type_a::interval_rep(w, v);
      for (int s = -2; s <= 3; ++s) {
        const auto r = fp::fpd_exact(m, s, vw, u);
        const std::size_t closed = type_a::closed_form_fpd(w, v, s);
        json kinds = json::array();
        bool kinds_agree = true;
        for (auto kind : type_a::satisfied_kinds(w, v)) {
          kinds.push_back(type_a::kind_name(kind));
          kinds_agree = kinds_agree && type_a::closed_form_fpd(w, v, s, kind) == closed;
        }
        const bool pass = r.integer_value && *r.integer_value == static_cast<long long>(closed) && kinds_agree;
        out.push_back({{"case", "n=" + std::to_string(w.n()) + " w=" + w.str() + " " + type_a::label(v) + " shift=" + shift_text(s)},
                       {"closed_form", closed},
                       {"computed", io::number(r.value)},
                       {"kinds", kinds},
                       {"pass", pass}});
      }
    }
    return out;
  });
  return finish("theorem0.8", p, std::move(cases));
}

json euler(Params& p) {
  const auto pairs = p.get<std::size_t>("pairs", 200);
  const auto seed = p.get<std::uint64_t>("seed", 7);
  const auto quivers = p.get<std::size_t>("quivers", 10);
  const auto max_dim = p.get<std::size_t>("max_dim", 4);
  if (quivers == 0) throw Error(ErrorCode::BadShape, "euler needs at least one quiver");
  Cases cases = collect(pairs, [&](std::size_t k) {
    // Pair k lives on quiver k mod quivers; every quiver is rebuilt from its own seed.
    const std::size_t qi = k % quivers;
    std::mt19937_64 qrng(seed * 1000003 + qi);
    const std::size_t n = 1 + qrng() % 6;
    const QuiverPtr q = share(random_acyclic_quiver(n, n + 2, qrng));
    const Representation m = random_representation(q, max_dim, seed * 7919 + 2 * k);
    const Representation nn = random_representation(q, max_dim, seed * 7919 + 2 * k + 1);
    const HomSpace h = hom_space(m, nn);
    bool basis_ok = true;
    for (const auto& f : h.basis) basis_ok = basis_ok && is_morphism(f, m, nn);
    const std::size_t ext = ext1_from_resolution(m, nn);
    const std::int64_t chi = euler_form(m.dims(), nn.dims(), *q);
    const bool pass = basis_ok && static_cast<std::int64_t>(h.dimension) - static_cast<std::int64_t>(ext) == chi;
    return Cases{{{"case", "pair " + pad(k, 4)},
                  {"quiver", qi},
                  {"hom", h.dimension},
                  {"ext1", ext},
                  {"euler_form", chi},
                  {"pass", pass}}};
  });
  return finish("euler", p, std::move(cases));
}

json duality(Params& p) {
  const auto n_max = p.get<std::size_t>("n_max", 5);
  const auto triples = p.get<std::size_t>("triples", 100);
  const auto seed = p.get<std::uint64_t>("seed", 11);
  Cases cases = collect(triples, [&](std::size_t k) {
    std::mt19937_64 rng(seed * 1000003 + k);
    const std::size_t n = 1 + rng() % 5;
    const QuiverPtr q = share(random_acyclic_quiver(n, n + 1, rng));
    const Representation m = random_representation(q, 2, rng());
    const Representation nn = random_representation(q, 2, rng());
    const Representation x = random_representation(q, 2, rng());
    const std::size_t lhs = hom_dim(tensor_vertexwise(m, nn), x);
    const std::size_t rhs = hom_dim(dual(x), tensor_vertexwise(dual(m), dual(nn)));
    return Cases{{{"case", "triple " + pad(k, 4)}, {"lhs", lhs}, {"rhs", rhs}, {"pass", lhs == rhs}}};
  });

  std::vector<type_a::OrientationWord> words;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (auto& w : type_a::OrientationWord::all(n)) words.push_back(w);
  const auto vw = fp::TensorStructure::vertexwise();
  std::size_t literal_mismatches = 0;
  std::vector<std::size_t> mismatch_per_word(words.size(), 0);
  Cases fpd_cases = collect(words.size(), [&](std::size_t k) {
    const auto& w = words[k];
    const auto rw = w.reversed();
    const auto u = fp::Universe::type_a(w);
    const auto ur = fp::Universe::type_a(rw);
    Cases out;
    for (const auto& v : type_a::all_indecomposables(w)) {
      const Representation m = type_a::interval_rep(w, v);
      const auto opposite_side = fp::fpd_exact_opposite(m, 0, vw, u);
      const auto dual_side = fp::fpd_exact(dual(m), 0, vw, ur);
      const auto literal = fp::fpd_exact(m, 0, vw, u);
      const bool pass = opposite_side.integer_value && dual_side.integer_value &&
                        *opposite_side.integer_value == *dual_side.integer_value;
      const bool literal_equal = literal.value == dual_side.value;
      if (!literal_equal) ++mismatch_per_word[k];
      out.push_back({{"case", "n=" + std::to_string(w.n()) + " w=" + w.str() + " " + type_a::label(v)},
                     {"fpd_opposite_category", io::number(opposite_side.value)},
                     {"fpd_dual_on_opposite_quiver", io::number(dual_side.value)},
                     {"fpd_on_quiver", io::number(literal.value)},
                     {"literal_equal", literal_equal},
                     {"pass", pass}});
    }
    return out;
  });
  for (auto c : mismatch_per_word) literal_mismatches += c;
  for (auto& c : fpd_cases) cases.push_back(std::move(c));
  return finish("duality", p, std::move(cases),
                {{"literal_mismatches", literal_mismatches},
                 {"note", "pass compares fpd in Repr(Q)^op with fpd of the dual on Q^op; literal_equal compares "
                          "fpd on Q with fpd of the dual on Q^op and is reported only"}});
}

json canonical_tensor(Params& p) {
  const auto n_max = p.get<std::size_t>("n_max", 4);
  const auto pairs = p.get<std::size_t>("pairs", 50);
  const auto seed = p.get<std::uint64_t>("seed", 3);
  const auto max_dim = p.get<std::size_t>("max_dim", 2);
  std::vector<type_a::OrientationWord> words;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto& w : type_a::OrientationWord::all(n)) words.push_back(w);
  Cases cases = collect(words.size(), [&](std::size_t k) {
    const auto& w = words[k];
    const auto s = wba::WeakBialgebra::create(wba::canonical_wba(w.quiver()), "canonical");
    std::size_t equal = 0;
    for (std::size_t t = 0; t < pairs; ++t) {
      const Representation m = random_representation(w.quiver(), max_dim, seed * 1000003 + 2 * t);
      const Representation nn = random_representation(w.quiver(), max_dim, seed * 1000003 + 2 * t + 1);
      if (wba::tensor_wba(*s, m, nn) == tensor_vertexwise(m, nn)) ++equal;
    }
    return Cases{{{"case", "n=" + std::to_string(w.n()) + " w=" + w.str()}, {"equal", equal}, {"pairs", pairs}, {"pass", equal == pairs}}};
  });
  return finish("canonical-tensor", p, std::move(cases));
}

json wba_axioms(Params& p) {
  const auto corruptions = p.get<std::size_t>("corruptions", 100);
  const auto seed = p.get<std::uint64_t>("seed", 5);
  const auto w_max = p.get<std::size_t>("w_max", 3);
  std::vector<std::pair<std::string, wba::CoproductSpec>> specs;
  for (auto& ns : wba::catalog_k2()) specs.emplace_back(ns.name, ns.spec);
  for (std::size_t w = 1; w <= w_max; ++w)
    for (auto& ns : wba::catalog_kronecker(w)) specs.emplace_back(ns.name + " w=" + std::to_string(w), ns.spec);
  Cases cases = collect(specs.size(), [&](std::size_t k) {
    const auto& [name, spec] = specs[k];
    const auto report = wba::check_axioms(spec);
    Cases out;
    json axioms = io::to_json(report);
    out.push_back({{"case", name + " axioms"}, {"report", axioms}, {"pass", report.ok}});
    std::mt19937_64 rng(seed * 1000003 + k);
    std::size_t detected = 0;
    json undetected = json::array();
    for (std::size_t c = 0; c < corruptions; ++c) {
      const auto bad = wba::corrupt_one_coefficient(spec, rng);
      if (!wba::check_axioms(bad.spec).ok)
        ++detected;
      else
        undetected.push_back(bad.description);
    }
    out.push_back({{"case", name + " corruptions"},
                   {"detected", detected},
                   {"corruptions", corruptions},
                   {"undetected", undetected},
                   {"pass", detected == corruptions}});
    return out;
  });
  return finish("wba-axioms", p, std::move(cases));
}

json kronecker_divergence(Params& p) {
  const auto size = p.get<std::size_t>("size", 12);
  const QuiverPtr q = share(kronecker_quiver(2));
  const auto vw = fp::TensorStructure::vertexwise();
  const auto family = bricks::kronecker_band_family(q);
  const Representation s1 = simple(q, 0);
  Cases cases = collect(size, [&](std::size_t i) {
    const std::size_t k = i + 1;
    const auto phi = family.generate(k);
    const bool certified = bricks::is_brick_set(phi);
    const auto a = fp::adjacency(phi, s1, 0, vw);
    const bool all_ones = a == spectral::NonnegIntMatrix::all_ones(k);
    const double rho = spectral::spectral_radius(a);
    const bool pass = certified && all_ones && std::fabs(rho - static_cast<double>(k)) <= 1e-9;
    return Cases{{{"case", "size " + pad(k)},
                  {"brick_set", certified},
                  {"all_ones", all_ones},
                  {"rho", io::number(rho)},
                  {"pass", pass}}};
  });
  const auto report = fp::fpd_lower_bound(s1, 0, vw, {family}, size);
  cases.push_back({{"case", "lower bound"},
                   {"value", io::number(report.value)},
                   {"divergent", report.divergent},
                   {"pass", report.divergent && std::fabs(report.value - static_cast<double>(size)) <= 1e-9}});
  return finish("kronecker-divergence", p, std::move(cases));
}

json gamma(Params& p) {
  const auto n_max = p.get<std::size_t>("n_max", 50);
  Cases cases = collect(n_max, [&](std::size_t i) {
    const std::size_t n = i + 1;
    const double rho = spectral::spectral_radius(spectral::gamma_matrix(n));
    const double closed = spectral::gamma_radius_closed(n);
    const bool pass = std::fabs(rho - closed) <= 1e-9 && rho >= std::sqrt(static_cast<double>(n));
    return Cases{{{"case", "n=" + pad(n)}, {"rho", io::number(rho)}, {"closed_form", io::number(closed)}, {"pass", pass}}};
  });
  return finish("gamma", p, std::move(cases));
}

json fpv(Params& p) {
  const auto count = p.get<std::size_t>("count", 50);
  const auto n_max = p.get<std::size_t>("n_max", 10);
  const auto seed = p.get<std::uint64_t>("seed", 13);
  const auto max_dim = p.get<std::size_t>("max_dim", 3);
  const auto vw = fp::TensorStructure::vertexwise();
  Cases cases = collect(count, [&](std::size_t k) {
    std::mt19937_64 rng(seed * 1000003 + k);
    const std::size_t n = 2 + rng() % 3;
    const auto words = type_a::OrientationWord::all(n);
    const auto& w = words[rng() % words.size()];
    const Representation m = random_representation(w.quiver(), max_dim, rng());
    const auto seq = fp::fpv_empirical(m, vw, n_max);
    const std::size_t closed = fp::fpv_closed_form(m, vw);
    const bool pass = seq.complete && seq.max_values.size() == n_max &&
                      seq.max_values.back() == static_cast<double>(closed);
    return Cases{{{"case", "rep " + pad(k, 3)},
                  {"orientation", w.str()},
                  {"dims", m.dims().components},
                  {"closed_form", closed},
                  {"empirical", seq.max_values.empty() ? json(nullptr) : io::number(seq.max_values.back())},
                  {"pass", pass}}};
  });
  return finish("fpv", p, std::move(cases));
}

const std::map<std::string, std::function<json(Params&)>>& registry() {
  static const std::map<std::string, std::function<json(Params&)>> suites = {
      {"canonical-tensor", canonical_tensor}, {"duality", duality}, {"euler", euler},
      {"fpv", fpv},                           {"gamma", gamma},     {"kronecker-divergence", kronecker_divergence},
      {"theorem0.8", theorem08},              {"wba-axioms", wba_axioms}};
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : registry()) out.push_back(name);
  return out;
}

json verify_suite(const std::string& name, const json& params) {
  const auto& suites = registry();
  auto it = suites.find(name);
  if (it == suites.end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "' (known: " + known + ")");
  }
  Params p(params);
  return it->second(p);
}

}  // namespace fpq::cli
