#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace fpq::cli {

/// Entry point of the `fpq` tool. Exit codes: 0 success, 1 domain error (a
/// structured error report is written), 2 usage error or malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names accepted by verify_suite, sorted.
std::vector<std::string> suite_names();

/// Runs a named property suite. `params` overrides the suite defaults; the
/// result lists one case per check, sorted by the "case" key, plus the
/// effective parameters. Throws UnknownSuite.
nlohmann::json verify_suite(const std::string& name, const nlohmann::json& params);

/// Indented plain-text projection of a JSON report.
std::string render_text(const nlohmann::json& report);

}  // namespace fpq::cli
