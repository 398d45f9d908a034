#include "fpq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fpq/error.hpp"

namespace fpq::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema(where + ": missing field '" + key + "'");
  return j.at(key);
}

std::size_t natural(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rational rational(const json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>()), 10));
  schema(where + ": expected a rational string \"p/q\" or an integer");
}

json rational_json(const Rational& r) { return to_string(r); }

json matrix_rows(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_rows(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) schema(where + ": expected an array of rows");
  RationalMatrix m(rows, cols);
  // A 0-row matrix is written []; a matrix with 0 columns as rows of [].
  if (j.size() != rows && !(rows == 0 && j.empty()))
    throw Error(ErrorCode::BadShape, where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw Error(ErrorCode::BadShape, where + ": row " + std::to_string(r + 1) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational(row[c], where);
  }
  return m;
}

QuiverPtr resolve_quiver(const json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    const std::filesystem::path p = base_dir / j.get<std::string>();
    return share(quiver_from_json(load_json_file(p)));
  }
  return share(quiver_from_json(j));
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path.string());
}

json number(double value) {
  if (!std::isfinite(value)) return json(nullptr);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  const double rounded = std::stod(buf);
  if (rounded == std::floor(rounded) && std::fabs(rounded) < 9.0e15) return json(static_cast<long long>(rounded));
  return json(rounded);
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"from", a.source + 1}, {"to", a.target + 1}});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  const std::size_t n = natural(field(j, "vertices", "quiver"), "quiver.vertices");
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    const json& list = j.at("arrows");
    if (!list.is_array()) schema("quiver.arrows: expected an array");
    for (const auto& a : list) {
      const json& id = field(a, "id", "arrow");
      if (!id.is_string()) schema("arrow.id: expected a string");
      const std::size_t from = natural(field(a, "from", "arrow"), "arrow.from");
      const std::size_t to = natural(field(a, "to", "arrow"), "arrow.to");
      if (from == 0 || to == 0 || from > n || to > n)
        throw Error(ErrorCode::BadArrow, "arrow '" + id.get<std::string>() + "' has an endpoint outside 1.." + std::to_string(n));
      arrows.push_back({id.get<std::string>(), from - 1, to - 1});
    }
  }
  return Quiver(n, std::move(arrows));
}

json to_json(const Representation& m) {
  json maps = json::object();
  for (std::size_t k = 0; k < m.quiver().arrow_count(); ++k) maps[m.quiver().arrow(k).id] = matrix_rows(m.map(k));
  return {{"quiver", to_json(m.quiver())}, {"dims", m.dims().components}, {"maps", maps}};
}

Representation representation_from_json(const json& j, const QuiverPtr& fallback, const std::filesystem::path& base_dir) {
  if (!j.is_object()) schema("representation: expected an object");
  QuiverPtr q = j.contains("quiver") ? resolve_quiver(j.at("quiver"), base_dir) : fallback;
  if (!q) schema("representation: missing field 'quiver'");
  const json& dims_json = field(j, "dims", "representation");
  if (!dims_json.is_array()) schema("representation.dims: expected an array");
  std::vector<std::size_t> dims;
  for (const auto& d : dims_json) dims.push_back(natural(d, "representation.dims"));
  if (dims.size() != q->vertex_count())
    throw Error(ErrorCode::LengthMismatch, "representation.dims has " + std::to_string(dims.size()) + " entries for " +
                                               std::to_string(q->vertex_count()) + " vertices");
  const json maps = j.contains("maps") ? j.at("maps") : json::object();
  if (!maps.is_object()) schema("representation.maps: expected an object keyed by arrow id");
  for (const auto& [key, value] : maps.items())
    if (q->find_arrow(key) == q->arrow_count()) schema("representation.maps: unknown arrow '" + key + "'");
  std::vector<RationalMatrix> out;
  for (const auto& a : q->arrows()) {
    if (maps.contains(a.id))
      out.push_back(matrix_from_rows(maps.at(a.id), dims[a.target], dims[a.source], "map " + a.id));
    else
      out.emplace_back(dims[a.target], dims[a.source]);
  }
  return {q, std::move(dims), std::move(out)};
}

json to_json(const spectral::NonnegIntMatrix& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.order(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.order(); ++c) {
      const BigInt& v = a(r, c);
      if (v.fits_slong_p())
        row.push_back(v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

spectral::NonnegIntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) schema("matrix: expected an array of rows");
  const std::size_t n = j.size();
  spectral::NonnegIntMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw Error(ErrorCode::BadShape, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const json& e = j[r][c];
      if (e.is_number_integer())
        a.set(r, c, BigInt(std::to_string(e.get<long long>()), 10));
      else if (e.is_string())
        a.set(r, c, BigInt(e.get<std::string>(), 10));
      else
        schema("matrix: entries must be integers");
    }
  }
  return a;
}

json to_json(const wba::CoproductSpec& s) {
  const auto& b = *s.basis;
  json delta = json::object(), counit = json::object();
  for (std::size_t g = 0; g < b.generator_count(); ++g) {
    json terms = json::array();
    for (const auto& [k, c] : s.delta[g]) terms.push_back({b.name(k.first), b.name(k.second), rational_json(c)});
    delta[b.name(b.generator_path(g))] = terms;
  }
  for (std::size_t k = 0; k < b.size(); ++k) counit[b.name(k)] = rational_json(s.counit[k]);
  return {{"quiver", to_json(b.quiver())}, {"delta", delta}, {"counit", counit}};
}

wba::CoproductSpec spec_from_json(const json& j, const std::filesystem::path& base_dir) {
  const QuiverPtr q = resolve_quiver(field(j, "quiver", "coproduct spec"), base_dir);
  wba::CoproductSpec s;
  s.basis = std::make_shared<const wba::PathAlgebraBasis>(q);
  const auto& b = *s.basis;
  auto path_index = [&](const json& name, const std::string& where) {
    if (!name.is_string()) schema(where + ": path names must be strings");
    auto k = b.parse(name.get<std::string>());
    if (!k) schema(where + ": '" + name.get<std::string>() + "' is not a path of the quiver");
    return *k;
  };
  auto generator_of = [&](std::size_t path) -> std::size_t {
    for (std::size_t g = 0; g < b.generator_count(); ++g)
      if (b.generator_path(g) == path) return g;
    schema("coproduct is given on generators (e_i and arrows) only, not on '" + b.name(path) + "'");
  };

  s.delta.resize(b.generator_count());
  const json& delta = field(j, "delta", "coproduct spec");
  if (!delta.is_object()) schema("delta: expected an object keyed by generator");
  for (const auto& [key, terms] : delta.items()) {
    const std::size_t g = generator_of(path_index(key, "delta"));
    if (!terms.is_array()) schema("delta." + key + ": expected a list of [left, right, coefficient]");
    for (const auto& t : terms) {
      if (!t.is_array() || t.size() != 3) schema("delta." + key + ": each term is [left, right, coefficient]");
      wba::add_term(s.delta[g], path_index(t[0], "delta." + key), path_index(t[1], "delta." + key),
                    rational(t[2], "delta." + key));
    }
  }

  std::vector<Rational> gen(b.generator_count(), Rational(0));
  std::map<std::size_t, Rational> explicit_values;
  if (j.contains("counit")) {
    const json& counit = j.at("counit");
    if (!counit.is_object()) schema("counit: expected an object keyed by path");
    for (const auto& [key, value] : counit.items()) explicit_values[path_index(key, "counit")] = rational(value, "counit");
  }
  for (std::size_t g = 0; g < b.generator_count(); ++g) {
    auto it = explicit_values.find(b.generator_path(g));
    if (it != explicit_values.end()) gen[g] = it->second;
  }
  s.counit = wba::extend_counit(b, gen);
  for (const auto& [k, v] : explicit_values) s.counit[k] = v;
  return s;
}

json to_json(const wba::AxiomReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms) {
    json e = {{"name", a.name}, {"ok", a.ok}};
    if (!a.ok) e["witness"] = a.witness;
    axioms.push_back(std::move(e));
  }
  json out = {{"ok", r.ok}, {"bialgebra", r.bialgebra}, {"axioms", axioms}};
  if (!r.ok) out["first_failure"] = r.first_failure;
  return out;
}

json to_json(const bricks::BrickSet& b) {
  json members = json::array();
  for (const auto& m : b.members) {
    json rep = to_json(m.rep);
    rep.erase("quiver");
    members.push_back({{"label", m.label}, {"shift", m.shift}, {"representation", rep}});
  }
  return {{"members", members}, {"certificate", to_json(b.certificate)}};
}

json to_json(const fp::FpdReport& r) {
  json out = {{"value", number(r.value)},
              {"mode", fp::mode_name(r.mode)},
              {"shift", r.shift},
              {"structure", r.structure},
              {"field", r.field},
              {"adjacency", to_json(r.adjacency)},
              {"witness_brick_set", to_json(r.witness)},
              {"brick_sets_evaluated", r.brick_sets_evaluated},
              {"integral", r.integer_value.has_value()}};
  if (r.mode == fp::Mode::LowerBound) {
    out["divergent"] = r.divergent;
    if (r.divergent) out["symbol"] = "Infinity-witnessed";
    json values = json::array();
    for (double v : r.family_values) values.push_back(number(v));
    out["family_values"] = values;
  }
  return out;
}

json to_json(const fp::FpvSequence& s) {
  json per = json::array();
  for (const auto& seq : s.per_vertex) {
    json row = json::array();
    for (double v : seq) row.push_back(number(v));
    per.push_back(row);
  }
  json maxes = json::array();
  for (double v : s.max_values) maxes.push_back(number(v));
  json out = {{"per_vertex", per}, {"max", maxes}, {"complete", s.complete}};
  if (!s.max_values.empty()) out["value_at_n_max"] = number(s.max_values.back());
  return out;
}

}  // namespace fpq::io
