#pragma once

// JSON forms of quivers, representations, coproduct specs, matrices and
// reports. Vertices are 1-based on the wire and 0-based in memory.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fpq/fpengine.hpp"
#include "fpq/wba.hpp"

namespace fpq::io {

using nlohmann::json;

/// Parses a file; malformed JSON becomes Error(ParseError) carrying the
/// file name and byte position.
json load_json_file(const std::filesystem::path& path);
json parse_json_text(const std::string& text, const std::string& origin);

/// 12 significant digits; integral values stay integers.
json number(double value);

json to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

/// "quiver" may be inline or a path relative to base_dir. When it is
/// absent, `fallback` is used.
json to_json(const Representation& m);
Representation representation_from_json(const json& j, const QuiverPtr& fallback = nullptr,
                                         const std::filesystem::path& base_dir = {});

json to_json(const spectral::NonnegIntMatrix& a);
spectral::NonnegIntMatrix matrix_from_json(const json& j);

json to_json(const wba::CoproductSpec& s);
wba::CoproductSpec spec_from_json(const json& j, const std::filesystem::path& base_dir = {});

json to_json(const wba::AxiomReport& r);
json to_json(const bricks::BrickSet& b);
json to_json(const fp::FpdReport& r);
json to_json(const fp::FpvSequence& s);

}  // namespace fpq::io
