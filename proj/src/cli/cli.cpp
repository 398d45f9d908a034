#include "fpq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fpq/error.hpp"
#include "fpq/fpengine.hpp"
#include "fpq/hom.hpp"
#include "fpq/io.hpp"

namespace fpq::cli {

using nlohmann::json;

namespace {

std::string strip_quotes(std::string s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) s = s.substr(1, s.size() - 2);
  return s;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::size_t parse_natural(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-')
    throw Error(ErrorCode::ParseError, what + ": expected a nonnegative integer, got '" + text + "'");
  return static_cast<std::size_t>(v);
}

// Quiver given on the command line, remembering the orientation word when it
// is of type A so intervals can be resolved.
struct QuiverSource {
  QuiverPtr quiver;
  std::optional<type_a::OrientationWord> word;
  std::string text;
};

QuiverSource load_quiver(const std::string& raw) {
  const std::string text = strip_quotes(raw);
  QuiverSource src;
  src.text = text;
  if (starts_with(text, "typeA:")) {
    src.word = type_a::OrientationWord::parse(strip_quotes(text.substr(6)));
    src.quiver = src.word->quiver();
  } else if (starts_with(text, "kronecker:")) {
    src.quiver = share(kronecker_quiver(parse_natural(text.substr(10), "--quiver kronecker:w")));
  } else {
    src.quiver = share(io::quiver_from_json(io::load_json_file(text)));
  }
  return src;
}

Representation load_object(const std::string& raw, const QuiverSource& q) {
  const std::string text = strip_quotes(raw);
  if (starts_with(text, "interval:")) {
    if (!q.word) throw Error(ErrorCode::WrongQuiver, "interval objects need a typeA:<word> quiver");
    const std::string body = text.substr(9);
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "interval:i,j expected, got '" + text + "'");
    const type_a::Interval v{parse_natural(body.substr(0, comma), "interval i"),
                             parse_natural(body.substr(comma + 1), "interval j")};
    return type_a::interval_rep(*q.word, v);
  }
  if (starts_with(text, "simple:")) {
    const std::size_t v = parse_natural(text.substr(7), "simple:v");
    if (v < 1 || v > q.quiver->vertex_count())
      throw Error(ErrorCode::BadShape, "simple:" + std::to_string(v) + " is not a vertex (1-based)");
    return simple(q.quiver, v - 1);
  }
  if (text == "unit") return unit_representation(q.quiver);
  if (text == "zero") return zero_representation(q.quiver);
  const std::filesystem::path path(text);
  return io::representation_from_json(io::load_json_file(path), q.quiver, path.parent_path());
}

// Resolves a structure name against the quiver in use. The catalog structures
// carry their own quivers; tensor_wba rejects a mismatch.
fp::TensorStructure load_structure(const std::string& raw, const QuiverSource& q) {
  const std::string text = strip_quotes(raw);
  if (text == "vertexwise") return fp::TensorStructure::vertexwise();
  if (!starts_with(text, "wba:")) throw Error(ErrorCode::ParseError, "unknown structure '" + text + "'");
  const std::string name = text.substr(4);
  if (name == "canonical") return fp::TensorStructure::from_wba(wba::WeakBialgebra::create(wba::canonical_wba(q.quiver), "canonical"));
  if (name == "ht")
    return fp::TensorStructure::from_wba(
        wba::WeakBialgebra::create(wba::ht_bialgebra(q.quiver), "ht", unit_representation(q.quiver)));
  auto from_catalog = [&](const std::vector<wba::NamedSpec>& catalog) {
    for (const auto& ns : catalog)
      if (ns.name == name) return fp::TensorStructure::from_wba(wba::WeakBialgebra::create(ns.spec, ns.name, ns.unit));
    throw Error(ErrorCode::ParseError, "unknown catalog structure '" + name + "'");
  };
  if (starts_with(name, "k2-")) return from_catalog(wba::catalog_k2());
  if (starts_with(name, "kronecker-")) {
    const auto& arrows = q.quiver->arrows();
    const bool kronecker = q.quiver->vertex_count() == 2 && !arrows.empty() &&
                           std::all_of(arrows.begin(), arrows.end(), [](const Arrow& a) { return a.source == 0 && a.target == 1; });
    if (!kronecker) throw Error(ErrorCode::WrongQuiver, "kronecker catalog structures need the quiver 1 => 2");
    return from_catalog(wba::catalog_kronecker(arrows.size()));
  }
  const std::filesystem::path path(name);
  auto spec = io::spec_from_json(io::load_json_file(path), path.parent_path());
  return fp::TensorStructure::from_wba(wba::WeakBialgebra::create(std::move(spec), path.stem().string()));
}

std::vector<Representation> load_list(const std::string& file, const QuiverSource& q, std::vector<std::string>& labels) {
  const std::filesystem::path path(file);
  json j = io::load_json_file(path);
  if (j.is_object() && j.contains("indecomposables")) j = j.at("indecomposables");
  if (!j.is_array()) throw Error(ErrorCode::ParseError, file + ": expected an array of representations");
  std::vector<Representation> out;
  for (const auto& item : j) {
    out.push_back(io::representation_from_json(item, q.quiver, path.parent_path()));
    labels.push_back(item.contains("label") ? item.at("label").get<std::string>() : "X" + std::to_string(out.size()));
  }
  return out;
}

// "a1,a2;b1" -> {{a1, a2}, {b1}}
std::vector<std::vector<std::string>> split_paths(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::stringstream outer(text);
  std::string path;
  while (std::getline(outer, path, ';')) {
    std::vector<std::string> arrows;
    std::stringstream inner(path);
    std::string a;
    while (std::getline(inner, a, ','))
      if (!a.empty()) arrows.push_back(a);
    out.push_back(arrows);
  }
  return out;
}

std::vector<int> parse_shifts(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "--shifts: bad shift '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "--shifts: empty list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Options shared by the subcommands; only the ones a subcommand registers end
// up in its config header.
struct Options {
  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  std::string quiver;
  std::string object;
  std::string m;
  std::string n;
  int shift = 0;
  std::string structure = "vertexwise";
  std::string structure2;
  std::string mode = "exact";
  std::size_t budget = 12;
  std::size_t search_budget = 100000;
  std::string indecomposables;
  std::string paths;
  bool opposite = false;
  std::size_t n_max = 10;
  std::string shifts = "0";
  std::size_t cap = bricks::kDefaultCliqueCap;
  std::string matrix;
  double tol = spectral::kDefaultTolerance;
  std::string spec;
  std::string catalog;
  std::string suite;
};

json unit_json(const wba::UnitCheck& u) { return {{"left", u.left}, {"right", u.right}}; }

json hom_cmd(const Options& o) {
  const auto q = load_quiver(o.quiver);
  const auto m = load_object(o.m, q);
  const auto n = load_object(o.n, q);
  const HomSpace h = hom_space(m, n);
  json basis = json::array();
  for (const auto& f : h.basis) {
    json per_vertex = json::array();
    for (const auto& block : f) {
      json rows = json::array();
      for (std::size_t r = 0; r < block.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < block.cols(); ++c) row.push_back(block(r, c).get_str());
        rows.push_back(row);
      }
      per_vertex.push_back(rows);
    }
    basis.push_back(per_vertex);
  }
  return {{"dim_hom", h.dimension}, {"basis", basis}};
}

json ext_cmd(const Options& o) {
  const auto q = load_quiver(o.quiver);
  const auto m = load_object(o.m, q);
  const auto n = load_object(o.n, q);
  return {{"dim_ext1", dim_ext1(m, n)},
          {"dim_hom", hom_dim(m, n)},
          {"euler_form", euler_form(m.dims(), n.dims(), *q.quiver)}};
}

json tensor_cmd(const Options& o) {
  const auto q = load_quiver(o.quiver);
  const auto ts = load_structure(o.structure, q);
  const auto t = ts.tensor(load_object(o.m, q), load_object(o.n, q));
  json rep = io::to_json(t);
  rep.erase("quiver");
  return {{"structure", ts.name()}, {"representation", rep}};
}

json fpd_cmd(const Options& o) {
  const auto q = load_quiver(o.quiver);
  const auto m = load_object(o.object, q);
  const auto ts = load_structure(o.structure, q);
  if (o.mode == "lower") {
    std::vector<bricks::BrickFamily> families;
    const auto& arrows = q.quiver->arrows();
    if (!o.paths.empty()) {
      const auto paths = split_paths(o.paths);
      if (paths.size() != 2) throw Error(ErrorCode::BadPaths, "--paths needs two paths separated by ';'");
      families.push_back(bricks::two_path_band_family(q.quiver, paths[0], paths[1]));
    } else if (q.quiver->vertex_count() == 2 && arrows.size() == 2 && arrows[0].source == 0 && arrows[0].target == 1 &&
               arrows[1].source == 0 && arrows[1].target == 1) {
      families.push_back(bricks::kronecker_band_family(q.quiver));
    }
    return io::to_json(fp::fpd_lower_bound(m, o.shift, ts, families, o.budget));
  }
  std::optional<fp::Universe> u;
  if (!o.indecomposables.empty()) {
    std::vector<std::string> labels;
    auto list = load_list(o.indecomposables, q, labels);
    u.emplace(std::move(list), std::move(labels), o.cap);
  } else if (q.word) {
    u.emplace(fp::Universe::type_a(*q.word, o.cap));
  } else {
    throw Error(ErrorCode::IncompleteList,
                "exact mode needs --indecomposables unless the quiver is typeA:<word>; use --mode lower otherwise");
  }
  return io::to_json(o.opposite ? fp::fpd_exact_opposite(m, o.shift, ts, *u) : fp::fpd_exact(m, o.shift, ts, *u));
}

json fpv_cmd(const Options& o) {
  const auto q = load_quiver(o.quiver);
  const auto m = load_object(o.object, q);
  const auto ts = load_structure(o.structure, q);
  json j = io::to_json(fp::fpv_empirical(m, ts, o.n_max));
  if (ts.is_canonical()) j["closed_form"] = fp::fpv_closed_form(m, ts);
  return j;
}

json bricks_cmd(const Options& o) {
  const auto q = load_quiver(o.quiver);
  std::vector<std::string> labels;
  std::vector<Representation> reps;
  if (!o.indecomposables.empty()) {
    reps = load_list(o.indecomposables, q, labels);
  } else if (q.word) {
    for (const auto& v : type_a::all_indecomposables(*q.word)) {
      reps.push_back(type_a::interval_rep(*q.word, v));
      labels.push_back(type_a::label(v));
    }
  } else {
    throw Error(ErrorCode::IncompleteList, "bricks enumerate needs --indecomposables unless the quiver is typeA:<word>");
  }
  std::vector<bricks::DerivedObject> candidates;
  for (int s : parse_shifts(o.shifts))
    for (std::size_t k = 0; k < reps.size(); ++k) candidates.push_back({reps[k], s, labels[k]});
  const auto found = bricks::maximal_brick_sets(candidates, o.cap);
  json sets = json::array();
  for (const auto& b : found.sets) sets.push_back(io::to_json(b));
  json result = {{"candidates", candidates.size()}, {"complete", found.complete}, {"count", found.sets.size()}, {"brick_sets", sets}};
  if (!found.complete) {
    // Partial results travel with the error.
    Error e(ErrorCode::CapExceeded, "clique cap " + std::to_string(o.cap) + " reached; " +
                                        std::to_string(found.sets.size()) + " brick sets listed are partial");
    throw std::pair<Error, json>(e, result);
  }
  return result;
}

json spectral_cmd(const Options& o) {
  const auto a = io::matrix_from_json(io::load_json_file(o.matrix));
  json comps = json::array();
  for (const auto& c : spectral::strong_components(a)) {
    json one = json::array();
    for (auto v : c) one.push_back(v + 1);
    comps.push_back(one);
  }
  return {{"order", a.order()},
          {"spectral_radius", io::number(spectral::spectral_radius(a, o.tol))},
          {"gershgorin_bound", io::number(spectral::gershgorin_bound(a))},
          {"strong_components", comps},
          {"tolerance", io::number(o.tol)}};
}

fp::TensorStructure wba_structure(const Options& o, const QuiverSource& q) {
  if (!o.spec.empty()) return load_structure("wba:" + o.spec, q);
  return load_structure(o.structure, q);
}

json wba_check(const Options& o) {
  // Reports every axiom rather than stopping at create()'s first failure.
  std::vector<std::pair<std::string, wba::CoproductSpec>> specs;
  const auto q = o.quiver.empty() ? QuiverSource{} : load_quiver(o.quiver);
  if (!o.spec.empty()) {
    const std::filesystem::path path(o.spec);
    specs.emplace_back(path.stem().string(), io::spec_from_json(io::load_json_file(path), path.parent_path()));
  } else {
    const std::string name = strip_quotes(o.structure);
    if (name == "wba:canonical" || name == "wba:ht") {
      if (!q.quiver) throw Error(ErrorCode::ParseError, "--quiver is required for " + name);
      specs.emplace_back(name.substr(4), name == "wba:canonical" ? wba::canonical_wba(q.quiver) : wba::ht_bialgebra(q.quiver));
    } else {
      std::vector<wba::NamedSpec> all = wba::catalog_k2();
      for (std::size_t w = 1; w <= 3; ++w)
        for (auto& ns : wba::catalog_kronecker(w)) all.push_back(ns);
      const std::size_t w = q.quiver ? q.quiver->arrow_count() : 2;
      for (auto& ns : all)
        if ("wba:" + ns.name == name && (starts_with(ns.name, "k2") || ns.spec.basis->quiver().arrow_count() == w))
          specs.emplace_back(ns.name, ns.spec);
      if (specs.empty()) throw Error(ErrorCode::ParseError, "unknown structure '" + name + "'");
    }
  }
  const auto report = wba::check_axioms(specs.front().second);
  json j = io::to_json(report);
  j["name"] = specs.front().first;
  return j;
}

json wba_catalog(const Options& o) {
  std::vector<wba::NamedSpec> specs;
  const std::string which = strip_quotes(o.catalog);
  if (which == "k2") {
    specs = wba::catalog_k2();
  } else if (starts_with(which, "kronecker:")) {
    specs = wba::catalog_kronecker(parse_natural(which.substr(10), "--catalog kronecker:w"));
  } else {
    throw Error(ErrorCode::ParseError, "--catalog expects k2 or kronecker:<w>");
  }
  json entries = json::array();
  for (const auto& ns : specs) {
    const auto report = wba::check_axioms(ns.spec);
    json e = {{"name", ns.name}, {"axioms", io::to_json(report)}, {"spec", io::to_json(ns.spec)}};
    if (report.ok) {
      const auto s = wba::WeakBialgebra::create(ns.spec, ns.name, ns.unit);
      const auto d = wba::is_discrete(*s);
      json failures = json::array();
      for (auto [i, j] : d.failures) failures.push_back({{"left", "S(" + std::to_string(i + 1) + ")"}, {"right", "S(" + std::to_string(j + 1) + ")"}});
      e["discrete"] = {{"discrete", d.discrete}, {"failures", failures}};
      const auto unit = wba::find_unit(*s, o.seed);
      json u = io::to_json(unit);
      u.erase("quiver");
      e["unit"] = {{"representation", u}, {"check", unit_json(wba::check_unit(*s, unit, o.seed))}};
    }
    entries.push_back(e);
  }
  return {{"catalog", which}, {"structures", entries}};
}

json wba_tensor(const Options& o) {
  const auto q = load_quiver(o.quiver);
  const auto ts = wba_structure(o, q);
  const auto t = ts.tensor(load_object(o.m, q), load_object(o.n, q));
  json rep = io::to_json(t);
  rep.erase("quiver");
  return {{"structure", ts.name()}, {"representation", rep}};
}

json wba_discrete(const Options& o) {
  const auto q = load_quiver(o.quiver);
  const auto ts = wba_structure(o, q);
  if (ts.is_vertexwise()) throw Error(ErrorCode::StructureMismatch, "wba discrete needs a wba: structure");
  const auto& s = *ts.structure();
  const auto d = wba::is_discrete(s);
  json failures = json::array();
  for (auto [i, j] : d.failures) failures.push_back({{"left", "S(" + std::to_string(i + 1) + ")"}, {"right", "S(" + std::to_string(j + 1) + ")"}});
  const auto unit = wba::find_unit(s, o.seed);
  json u = io::to_json(unit);
  u.erase("quiver");
  return {{"structure", ts.name()},
          {"discrete", d.discrete},
          {"failures", failures},
          {"unit", u},
          {"unit_check", unit_json(wba::check_unit(s, unit, o.seed))}};
}

json wba_equivalent(const Options& o) {
  const auto q = load_quiver(o.quiver);
  const auto a = load_structure(o.structure, q);
  const auto b = load_structure(o.structure2, q);
  if (a.is_vertexwise() || b.is_vertexwise()) throw Error(ErrorCode::StructureMismatch, "wba equivalent compares two wba: structures");
  const auto found = wba::equivalent_structures(a.structure()->spec(), b.structure()->spec(), o.search_budget);
  json j = {{"first", a.name()}, {"second", b.name()}, {"equivalent", found ? json(true) : json("inconclusive")}};
  if (found) {
    const auto& basis = a.structure()->basis();
    json vmap = json::array();
    for (auto v : found->vertex_map) vmap.push_back(v + 1);
    json images = json::object();
    for (std::size_t k = 0; k < found->arrow_images.size(); ++k) {
      json terms = json::object();
      for (const auto& [p, c] : found->arrow_images[k]) terms[basis.name(p)] = c.get_str();
      images[basis.quiver().arrow(k).id] = terms;
    }
    j["automorphism"] = {{"vertex_map", vmap}, {"arrow_images", images}};
  }
  return j;
}

void render(const json& j, const std::string& indent, std::ostringstream& out) {
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const json& v) {
    return std::all_of(v.begin(), v.end(), [](const json& x) {
      return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_primitive(); }));
    });
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        out << indent << k << ": " << scalar(v) << "\n";
      } else if (v.is_array() && flat(v)) {
        out << indent << k << ": " << v.dump() << "\n";
      } else {
        out << indent << k << ":\n";
        render(v, indent + "  ", out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() && flat(v)) {
        // One line per flat record, e.g. a suite case.
        std::string line;
        for (const auto& [k, x] : v.items()) line += (line.empty() ? "" : "  ") + k + "=" + (x.is_array() ? x.dump() : scalar(x));
        out << indent << "- " << line << "\n";
      } else if (v.is_primitive()) {
        out << indent << "- " << scalar(v) << "\n";
      } else {
        out << indent << "-\n";
        render(v, indent + "  ", out);
      }
    }
  } else {
    out << indent << scalar(j) << "\n";
  }
}

json error_json(const Error& e) { return {{"error", {{"code", std::string(error_name(e.code()))}, {"message", e.what()}}}}; }

// "--n-max 50" / "--n-max=50" -> {"n_max": 50}; values that parse as JSON
// scalars keep their type.
json suite_params(const std::vector<std::string>& extras, Options& o) {
  json p = json::object();
  for (std::size_t k = 0; k < extras.size(); ++k) {
    std::string key = extras[k];
    if (!starts_with(key, "--")) throw CLI::ExtrasError({key});
    key = key.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else if (k + 1 < extras.size()) {
      value = extras[++k];
    } else {
      throw CLI::ArgumentMismatch(key, 1, 0);
    }
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "format" || key == "out") {
      // Global options written after the suite name.
      (key == "format" ? o.format : o.out_path) = value;
      if (o.format != "text" && o.format != "json") throw CLI::ValidationError("--format", "expected text or json");
      continue;
    }
    json v = json::parse(value, nullptr, false);
    p[key] = (v.is_discarded() || v.is_structured()) ? json(value) : v;
  }
  return p;
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius-Perron dimensions of quiver representations", "fpq"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out_path, "write the report here instead of stdout");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  // Each option's value goes into the config header when it was set or has a default.
  struct Recorded {
    const CLI::App* sub;
    std::string name;
    std::function<json()> value;
  };
  std::vector<Recorded> recorded;
  auto add = [&](CLI::App* sub, const std::string& flag, auto& target, const std::string& help) {
    auto* opt = sub->add_option(flag, target, help);
    recorded.push_back({sub, flag.substr(2), [&target] { return json(target); }});
    return opt;
  };
  auto quiver = [&](CLI::App* sub) { add(sub, "--quiver", o.quiver, "typeA:<word>, kronecker:<w> or a quiver JSON file")->required(); };
  auto pair = [&](CLI::App* sub) {
    add(sub, "--m", o.m, "first object")->required();
    add(sub, "--n", o.n, "second object")->required();
  };
  auto structure = [&](CLI::App* sub) { add(sub, "--structure", o.structure, "vertexwise or wba:<name|file>"); };

  auto* hom = app.add_subcommand("hom", "dim Hom(M, N) with a basis");
  quiver(hom);
  pair(hom);
  auto* ext = app.add_subcommand("ext", "dim Ext^1(M, N) and the Euler form");
  quiver(ext);
  pair(ext);
  auto* tensor = app.add_subcommand("tensor", "M (x) N under a structure");
  quiver(tensor);
  pair(tensor);
  structure(tensor);

  auto* fpd = app.add_subcommand("fpd", "Frobenius-Perron dimension of M[shift] (x) -");
  quiver(fpd);
  add(fpd, "--object", o.object, "interval:i,j, simple:v, unit, zero or a file")->required();
  add(fpd, "--shift", o.shift, "degree of M");
  structure(fpd);
  add(fpd, "--mode", o.mode, "exact or lower")->check(CLI::IsMember({"exact", "lower"}));
  add(fpd, "--budget", o.budget, "largest family size in lower mode");
  add(fpd, "--indecomposables", o.indecomposables, "complete list of indecomposables (JSON array)");
  add(fpd, "--paths", o.paths, "two-path band family, e.g. a1,a2;b1,b2");
  add(fpd, "--cap", o.cap, "clique cap");
  fpd->add_flag("--opposite", o.opposite, "compute in the opposite category");
  recorded.push_back({fpd, "opposite", [&o] { return json(o.opposite); }});

  auto* fpv = app.add_subcommand("fpv", "Frobenius-Perron curvature sequence");
  quiver(fpv);
  add(fpv, "--object", o.object, "object")->required();
  structure(fpv);
  add(fpv, "--n-max", o.n_max, "largest tensor power");

  auto* brick = app.add_subcommand("bricks", "brick sets");
  auto* enumerate = brick->add_subcommand("enumerate", "maximal brick sets among the indecomposables");
  brick->require_subcommand(1);
  quiver(enumerate);
  add(enumerate, "--shifts", o.shifts, "comma-separated shifts");
  add(enumerate, "--cap", o.cap, "clique cap");
  add(enumerate, "--indecomposables", o.indecomposables, "list of indecomposables (JSON array)");

  auto* spec = app.add_subcommand("spectral", "spectral radius of a nonnegative integer matrix");
  add(spec, "--matrix", o.matrix, "matrix JSON file")->required();
  add(spec, "--tol", o.tol, "relative tolerance");

  auto* wbacmd = app.add_subcommand("wba", "weak bialgebra structures");
  wbacmd->require_subcommand(1);
  auto* check = wbacmd->add_subcommand("check", "axiom report");
  add(check, "--spec", o.spec, "coproduct spec file");
  add(check, "--quiver", o.quiver, "quiver for wba:canonical and wba:ht");
  structure(check);
  auto* catalog = wbacmd->add_subcommand("catalog", "built-in structures with axioms, units and discreteness");
  add(catalog, "--catalog", o.catalog, "k2 or kronecker:<w>")->required();
  auto* wtensor = wbacmd->add_subcommand("tensor", "induced tensor product");
  quiver(wtensor);
  pair(wtensor);
  structure(wtensor);
  add(wtensor, "--spec", o.spec, "coproduct spec file");
  auto* discrete = wbacmd->add_subcommand("discrete", "discreteness test");
  quiver(discrete);
  structure(discrete);
  add(discrete, "--spec", o.spec, "coproduct spec file");
  auto* equivalent = wbacmd->add_subcommand("equivalent", "search for an algebra automorphism relating two structures");
  quiver(equivalent);
  structure(equivalent);
  add(equivalent, "--structure2", o.structure2, "second structure")->required();
  add(equivalent, "--budget", o.search_budget, "candidate budget");

  auto* verify = app.add_subcommand("verify", "property suites; extra --key value pairs override defaults");
  verify->add_option("suite", o.suite, "suite name")->required();
  verify->allow_extras();
  verify->fallthrough(false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::string command;
  const CLI::App* leaf = &app;
  while (!leaf->get_subcommands().empty()) {
    leaf = leaf->get_subcommands().front();
    command += (command.empty() ? "" : " ") + leaf->get_name();
  }

  json config = {{"command", command}, {"seed", o.seed}, {"format", o.format}};
  for (const auto& r : recorded)
    if (r.sub == leaf) config[r.name] = r.value();

  auto emit = [&](const json& report) {
    const std::string text = o.format == "json" ? report.dump(2) + "\n" : render_text(report);
    if (o.out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out_path);
      if (!f) throw Error(ErrorCode::ParseError, "cannot write " + o.out_path);
      f << text;
    }
  };

  try {
    json result;
    int code = 0;
    if (leaf == hom) result = hom_cmd(o);
    else if (leaf == ext) result = ext_cmd(o);
    else if (leaf == tensor) result = tensor_cmd(o);
    else if (leaf == fpd) result = fpd_cmd(o);
    else if (leaf == fpv) result = fpv_cmd(o);
    else if (leaf == enumerate) result = bricks_cmd(o);
    else if (leaf == spec) result = spectral_cmd(o);
    else if (leaf == check) result = wba_check(o);
    else if (leaf == catalog) result = wba_catalog(o);
    else if (leaf == wtensor) result = wba_tensor(o);
    else if (leaf == discrete) result = wba_discrete(o);
    else if (leaf == equivalent) result = wba_equivalent(o);
    else if (leaf == verify) {
      json params = suite_params(verify->remaining(), o);
      if (!params.contains("seed") && app.get_option("--seed")->count() > 0) params["seed"] = o.seed;
      config["suite"] = o.suite;
      config["format"] = o.format;
      result = verify_suite(o.suite, params);
      config["params"] = result.at("params");
      result.erase("params");
      code = result.at("ok").get<bool>() ? 0 : 1;
    }
    emit({{"config", config}, {"result", result}});
    return code;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::pair<Error, json>& partial) {
    json j = error_json(partial.first);
    j["partial"] = partial.second;
    j["config"] = config;
    out << j.dump(2) << "\n";
    return 1;
  } catch (const spectral::NoConvergence& e) {
    json j = {{"error", {{"code", "NoConvergence"}, {"message", e.what()}, {"lower", io::number(e.lower)}, {"upper", io::number(e.upper)}}},
              {"config", config}};
    out << j.dump(2) << "\n";
    return 1;
  } catch (const Error& e) {
    json j = error_json(e);
    j["config"] = config;
    out << j.dump(2) << "\n";
    err << error_name(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    json j = {{"error", {{"code", "ParseError"}, {"message", e.what()}}}, {"config", config}};
    out << j.dump(2) << "\n";
    return 2;
  }
}

}  // namespace fpq::cli
