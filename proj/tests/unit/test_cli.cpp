#include "doctest.h"
#include "orbitlab/errors.hpp"
#include "orbitlab/run.hpp"

using namespace orbitlab;

namespace {

const std::filesystem::path fixtures = ORBITLAB_FIXTURES;

std::string schema_path(const Json& doc) {
  try {
    parse_problem(doc);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "";
}

Json orbit_problem() {
  return Json::parse(R"({"kind": "orbit-intersect", "map": [[2, 0], [0, 2]], "point": ["2", "3"],
    "hypersurface": [{"coeff": "1", "exps": [1, 0]}, {"coeff": "-1", "exps": [0, 1]},
                     {"coeff": "1", "exps": [0, 0]}], "n_max": 30})");
}

}  // namespace

TEST_CASE("schema validation names the JSON path") {
  CHECK(schema_path(Json::parse(R"({"kind": "nope"})")) == "/kind");
  CHECK(schema_path(Json::parse(R"({"map": []})")) == "/kind");
  Json doc = orbit_problem();
  doc["hypersurface"][1]["weight"] = 1;
  CHECK(schema_path(doc) == "/hypersurface/1/weight");
  doc = orbit_problem();
  doc["point"][1] = "3/0";
  CHECK(schema_path(doc) == "/point/1");
  doc = orbit_problem();
  doc["map"][0][1] = -1;
  CHECK(schema_path(doc) == "/map");
  doc = orbit_problem();
  doc.erase("n_max");
  CHECK(schema_path(doc) == "/n_max");
  doc = orbit_problem();
  doc["extra"] = true;
  CHECK(schema_path(doc) == "/extra");
  doc = orbit_problem();
  doc["mode"] = "fast";
  CHECK(schema_path(doc) == "/mode");
  CHECK(schema_path(Json::parse(R"({"kind": "bound-calc", "formula": "T3.1"})")) == "/n");
  CHECK(schema_path(Json::parse(R"({"kind": "bound-calc", "formula": "T3.1", "n": 3, "m": 2})")) == "/m");
  CHECK(schema_path(Json::parse(R"({"kind": "lrs-zeros", "coeffs": [1, 0], "init": [1, 1], "n_max": 3})")) ==
        "/coeffs");
  CHECK(schema_path(Json::parse(R"({"kind": "unit-solve", "coeffs": ["1", "-1"],
    "generators": [["2", "2", "2"]], "box": 1})")) == "/generators");
  CHECK(schema_path(orbit_problem()).empty());
}

TEST_CASE("run reports") {
  const auto out = run_problem(orbit_problem());
  CHECK(out.exit_code == 0);
  CHECK(out.report["tool"] == "orbitlab");
  CHECK(out.report["results"]["steps"] == Json::array({0}));
  CHECK(out.report["bounds_ledger"][0]["holds"] == true);
  CHECK(out.report["input"] == orbit_problem());

  const auto bound = run_problem(Json::parse(R"({"kind": "bound-calc", "formula": "T3.1", "n": 3})"));
  CHECK(bound.report["results"]["log10"].get<double>() == doctest::Approx(1341.6).epsilon(1e-4));

  const auto fib = run_problem(Json::parse(R"({"kind": "lrs-zeros", "coeffs": [1, 1], "init": [0, 1], "n_max": 100})"));
  CHECK(fib.report["results"]["isolated"] == Json::array({0}));
  CHECK(fib.report["results"]["degeneracy"] == 1);
}

TEST_CASE("exit code 2 when no theorem applies") {
  // Identity-like map: no theorem's hypotheses hold.
  const auto out = run_problem(Json::parse(R"({"kind": "orbit-intersect", "map": [[1, 0], [0, 1]],
    "point": ["2", "3"], "hypersurface": [{"coeff": "1", "exps": [1, 0]}, {"coeff": "-2", "exps": [0, 0]}],
    "n_max": 5})"));
  CHECK(out.exit_code == 2);
  CHECK(out.report["results"]["steps"].size() == 6);
  CHECK(out.report["hypotheses_met"] == false);
}

TEST_CASE("a violated bound sets exit code 1") {
  const auto out = run_problem(Json::parse(R"({"kind": "bound-calc", "formula": "bell", "k": 4, "count": 16})"));
  CHECK(out.exit_code == 1);
  CHECK(out.report["bounds_ledger"][0]["holds"] == false);
}

TEST_CASE("overrides and determinism") {
  RunOptions opts;
  opts.n_max = 5;
  opts.mode = "hybrid";
  opts.seed = 3;
  const auto a = run_problem(orbit_problem(), opts);
  const auto b = run_problem(orbit_problem(), opts);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.report["input"]["n_max"] == 5);
  CHECK(a.report["results"]["mode"] == "hybrid");
  CHECK(a.report["results"]["primes"].size() == 5);
  RunOptions wrong;
  wrong.n_max = 3;
  CHECK_THROWS_AS(run_problem(Json::parse(R"({"kind": "indep-check", "values": ["2"]})"), wrong), SchemaError);
}

TEST_CASE("reproduce harness") {
  const auto empty = reproduce_suite(read_json_file(fixtures / "empty_manifest.json"), fixtures);
  CHECK(empty.exit_code == 0);
  CHECK(empty.lines.empty());
  const auto violated = reproduce_suite(read_json_file(fixtures / "violated_manifest.json"), fixtures);
  CHECK(violated.exit_code == 1);
  REQUIRE(violated.lines.size() == 1);
  CHECK(violated.lines[0].rfind("FAIL criterion fixture", 0) == 0);
  const auto shipped = reproduce_suite(read_json_file(fixtures / "../acceptance/manifest.json"),
                                       fixtures / "../acceptance");
  for (const auto& line : shipped.lines) CHECK_MESSAGE(line.rfind("PASS", 0) == 0, line);
  CHECK(shipped.exit_code == 0);
  CHECK_THROWS_AS(reproduce_suite(Json::parse(R"({"entries": [{"criterion": "x",
    "problem": {"kind": "bound-calc", "formula": "zzz"}}]})"), fixtures), Error);
}
