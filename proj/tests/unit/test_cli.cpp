#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fpq/cli.hpp"
#include "fpq/error.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fpq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("fpd on a type A source interval") {
  const auto j = run_json({"fpd", "--quiver", "typeA:\"<>\"", "--object", "interval:2,2", "--shift", "0"});
  CHECK(j["result"]["value"] == 2);
  CHECK(j["config"]["quiver"] == "typeA:\"<>\"");
  CHECK(j["config"]["shift"] == 0);
  CHECK(j["result"]["field"] == "Q");
  const auto neg = run_json({"fpd", "--quiver", "typeA:><", "--object", "interval:2,2", "--shift", "-1"});
  CHECK(neg["result"]["value"] == 0);
}

TEST_CASE("exit codes") {
  const auto bad = temp_file("fpq_bad.json", "{\"vertices\": 2,\n  ]");
  const auto r = run({"fpd", "--quiver", bad.string(), "--object", "unit"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["error"]["code"] == "ParseError");
  CHECK(r.out.find("byte") != std::string::npos);
  CHECK(run({"fpd", "--quiver"}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"fpd", "--quiver", "typeA:>", "--object", "interval:2,1"}).code == 1);
  const auto unknown = run({"verify", "nope"});
  CHECK(unknown.code == 1);
  CHECK(json::parse(unknown.out)["error"]["code"] == "UnknownSuite");
  const auto inc = run({"fpd", "--quiver", "kronecker:2", "--object", "simple:1"});
  CHECK(inc.code == 1);
  CHECK(json::parse(inc.out)["error"]["code"] == "IncompleteList");
}

TEST_CASE("reports are reproducible") {
  const std::vector<std::string> args = {"--format", "json", "verify", "euler", "--pairs", "20", "--seed", "3"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  CHECK(j["config"]["params"]["pairs"] == 20);
  CHECK(j["result"]["passed"] == 20);
}

TEST_CASE("suites") {
  const auto names = fpq::cli::suite_names();
  CHECK(names.size() == 8);
  CHECK(std::is_sorted(names.begin(), names.end()));
  const auto g = fpq::cli::verify_suite("gamma", {{"n_max", 5}});
  CHECK(g["passed"] == 5);
  CHECK(g["ok"] == true);
  const auto& cases = g["cases"];
  CHECK(std::is_sorted(cases.begin(), cases.end(), [](const json& x, const json& y) {
    return x["case"].get<std::string>() < y["case"].get<std::string>();
  }));
  const auto t = run({"verify", "theorem0.8", "--n", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("closed_form=") != std::string::npos);
  CHECK_THROWS_AS(fpq::cli::verify_suite("nope", json::object()), fpq::Error);
}

TEST_CASE("text is a projection of the JSON") {
  const json j = {{"a", 1}, {"b", {{"c", "x"}}}, {"rows", {{{"case", "k"}, {"pass", true}}}}};
  const std::string text = fpq::cli::render_text(j);
  CHECK(text == "a: 1\nb:\n  c: x\nrows:\n  - case=k  pass=true\n");
}

TEST_CASE("other subcommands") {
  CHECK(run_json({"hom", "--quiver", "typeA:>", "--m", "simple:2", "--n", "interval:1,2"})["result"]["dim_hom"] == 1);
  CHECK(run_json({"ext", "--quiver", "typeA:>", "--m", "simple:1", "--n", "simple:2"})["result"]["dim_ext1"] == 1);
  const auto lower = run_json({"fpd", "--quiver", "kronecker:2", "--object", "simple:1", "--mode", "lower", "--budget", "5"});
  CHECK(lower["result"]["divergent"] == true);
  CHECK(lower["result"]["symbol"] == "Infinity-witnessed");
  const auto bs = run_json({"bricks", "enumerate", "--quiver", "typeA:>", "--shifts", "0"});
  CHECK(bs["result"]["count"] == 2);
  const auto mat = temp_file("fpq_mat.json", "[[0,1],[1,0]]");
  CHECK(run_json({"spectral", "--matrix", mat.string()})["result"]["spectral_radius"] == 1);
  const auto d = run_json({"wba", "discrete", "--quiver", "kronecker:2", "--structure", "wba:kronecker-a"});
  CHECK(d["result"]["discrete"] == false);
  CHECK(d["result"]["failures"][0]["left"] == "S(1)");
  CHECK(d["result"]["failures"][0]["right"] == "S(2)");
  const auto chk = run_json({"wba", "check", "--quiver", "kronecker:2", "--structure", "wba:kronecker-b"});
  CHECK(chk["result"]["first_failure"] == "coassociativity");
  const auto cat = run_json({"wba", "catalog", "--catalog", "k2"});
  CHECK(cat["result"]["structures"].size() == 5);
  const auto t = run_json({"tensor", "--quiver", "typeA:><", "--m", "unit", "--n", "interval:1,2", "--structure", "wba:canonical"});
  CHECK(t["result"]["representation"]["dims"] == json({1, 1, 0}));
}
