#include "orbitlab/run.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "orbitlab/errors.hpp"
#include "orbitlab/relations.hpp"
#include "orbitlab/scalar_io.hpp"

namespace orbitlab {

namespace {

Json params_json(const BoundParams& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

Json bound_json(const BoundValue& b) {
  Json out;
  out["formula"] = b.formula_id;
  out["params"] = params_json(b.params);
  const double l10 = b.log10();
  out["log10"] = std::isfinite(l10) ? Json(l10) : Json(nullptr);
  out["log10_text"] = b.log10_text();
  if (b.log_log) out["log_log_text"] = b.log_log->hi().to_string(12);
  if (b.exact) out["exact"] = to_string(*b.exact);
  return out;
}

Json ledger_entry(const std::string& label, const BoundValue& b, const BigInt& count, bool holds) {
  Json out;
  out["label"] = label;
  out["formula"] = b.formula_id;
  out["params"] = params_json(b.params);
  out["log10_text"] = b.log10_text();
  out["count"] = to_string(count);
  out["holds"] = holds;
  return out;
}

Json ledger_from(const std::vector<BoundCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) out.push_back(ledger_entry(c.label, c.bound, c.count, c.holds));
  return out;
}

Json ledger_from(const std::vector<TheoremBound>& bounds, std::size_t count) {
  Json out = Json::array();
  const BigInt c(static_cast<unsigned long>(count));
  for (const auto& b : bounds)
    out.push_back(ledger_entry("Theorem " + b.theorem, b.bound, c, compare_count(c, b.bound)));
  return out;
}

Json theorems_json(const std::vector<TheoremCheck>& checks) {
  Json out = Json::array();
  for (const auto& t : checks) {
    Json conds = Json::array();
    for (const auto& c : t.conditions) {
      Json cj;
      cj["name"] = c.name;
      cj["holds"] = c.holds;
      if (!c.detail.empty()) cj["detail"] = c.detail;
      conds.push_back(std::move(cj));
    }
    Json tj;
    tj["theorem"] = t.theorem;
    tj["applies"] = t.applies;
    tj["conditions"] = std::move(conds);
    if (t.bound) tj["bound"] = bound_json(*t.bound);
    out.push_back(std::move(tj));
  }
  return out;
}

Json intersection_json(const IntersectionReport& r) {
  Json out;
  Json members = Json::array();
  for (const auto& m : r.members) members.push_back({{"n", m.n}, {"tag", to_string(m.tag)}});
  out["members"] = std::move(members);
  out["steps"] = r.member_steps();
  out["n_max"] = r.n_max;
  out["mode"] = to_string(r.mode);
  out["primes"] = r.primes;
  Json bounds = Json::array();
  for (const auto& b : r.bounds) {
    Json bj = bound_json(b.bound);
    bj["theorem"] = b.theorem;
    bounds.push_back(std::move(bj));
  }
  out["bounds"] = std::move(bounds);
  return out;
}

Json zero_set_json(const ZeroSetReport& r) {
  Json out;
  out["isolated"] = r.isolated;
  Json aps = Json::array();
  for (const auto& ap : r.progressions) aps.push_back({{"offset", ap.offset}, {"difference", ap.difference}});
  out["progressions"] = std::move(aps);
  out["zeros"] = r.all_zeros();
  out["n_max"] = r.n_max;
  out["degeneracy"] = r.degeneracy;
  out["simple"] = r.simple;
  out["nondegenerate"] = r.nondegenerate;
  out["order"] = r.order;
  return out;
}

Json tuple_json(const Tuple& x) {
  Json out = Json::array();
  for (const auto& v : x) out.push_back(format_monomial_scalar(v));
  return out;
}

Json int_vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

bool ledger_holds(const Json& ledger) {
  for (const auto& e : ledger)
    if (!e.at("holds").get<bool>()) return false;
  return true;
}

struct Outcome {
  Json results;
  Json ledger = Json::array();
  bool hypotheses_met = true;
};

Outcome run_orbit(const OrbitProblem& p) {
  Outcome o;
  const auto checks = applicable_theorems(p.map, p.g, p.point);
  const IntersectionReport r = intersection_set(p.map, p.g, p.point, p.n_max, p.scan);
  o.results = intersection_json(r);
  o.results["theorems"] = theorems_json(checks);
  std::optional<std::uint64_t> n0;
  try {
    n0 = dominant_term_threshold(p.map, p.g, p.point);
  } catch (const ResourceError&) {
  }
  o.results["dominant_threshold"] = n0 ? Json(*n0) : Json(nullptr);
  o.ledger = ledger_from(r.bounds, r.members.size());
  o.hypotheses_met = !r.bounds.empty();
  return o;
}

Outcome run_sync(const SyncProblem& p) {
  Outcome o;
  const SyncReport r = synchronized_intersection(p.f, p.h, p.w1, p.w2, p.n_max, p.scan);
  o.results["members"] = r.members;
  o.results["n_max"] = r.n_max;
  o.results["superset"] = intersection_json(r.superset);
  o.ledger = ledger_from(r.superset.bounds, r.superset.members.size());
  o.hypotheses_met = !r.superset.bounds.empty();
  return o;
}

Outcome run_lrs(const LrsProblem& p) {
  Outcome o;
  const ZeroSetReport r = zero_set(p.l, p.n_max);
  o.results = zero_set_json(r);
  o.results["minimal_order"] = minimal_order(p.l);
  o.results["characteristic_polynomial"] = p.l.characteristic_polynomial().to_string();
  o.ledger = ledger_from(r.bounds);
  return o;
}

Outcome run_exppoly(const ExpPolyProblem& p) {
  Outcome o;
  const ZeroSetReport r = p.mu ? value_set(p.f, *p.mu, p.n_max) : exppoly_zero_scan(p.f, p.n_max);
  o.results = zero_set_json(r);
  if (p.mu) {
    o.results["solutions"] = o.results["zeros"];
    o.results.erase("zeros");
  }
  o.ledger = ledger_from(r.bounds);
  return o;
}

Outcome run_indep(const IndepProblem& p) {
  Outcome o;
  const IndependenceResult r = is_multiplicatively_independent(p.values);
  o.results["independent"] = r.independent;
  o.results["certificate"] = r.certificate ? int_vector_json(*r.certificate) : Json(nullptr);
  o.results["certificate_verified"] = r.certificate ? Json(verify_relation(p.values, *r.certificate)) : Json(nullptr);
  Json basis = Json::array();
  for (const auto& row : r.lattice.basis) basis.push_back(int_vector_json(row));
  o.results["relation_lattice"] = {{"ambient_dimension", r.lattice.dimension}, {"rank", r.lattice.basis.size()}, {"basis", std::move(basis)}};
  return o;
}

Outcome run_unit(const UnitProblem& p) {
  Outcome o;
  const auto sols = enumerate_solutions(p.coeffs, p.gamma, p.box, p.cfg);
  const auto classes = proportionality_classes(sols);
  const auto weak = weak_proportionality_classes(sols, p.coeffs);
  const UnitCounts counts = unit_counts(sols, classes, weak);
  const std::size_t k = p.coeffs.size();
  const std::size_t r = p.gamma.rank();

  o.results["k"] = k;
  o.results["generators"] = p.gamma.generators().size();
  o.results["rank"] = r;
  o.results["box"] = p.box;
  Json sj = Json::array();
  for (const auto& s : sols)
    sj.push_back({{"exponents", s.exponents}, {"x", tuple_json(s.x)}, {"nondegenerate", s.nondegenerate}});
  o.results["solution_count"] = sols.size();
  o.results["solutions"] = std::move(sj);
  Json cj = Json::array();
  for (const auto& c : classes) cj.push_back({{"representative", tuple_json(c.representative)}, {"members", c.members}});
  o.results["proportionality_classes"] = std::move(cj);
  Json pp = Json::array();
  for (const auto& e : weak.per_partition)
    pp.push_back({{"partition", to_string(e.partition)}, {"members", e.members}, {"classes", e.classes}});
  o.results["weak_proportionality"] = {{"closure_classes", weak.closure_classes},
                                       {"per_partition", std::move(pp)},
                                       {"per_partition_total", weak.per_partition_total()}};
  o.results["counts"] = {{"nondegenerate_classes", counts.nondegenerate_classes},
                         {"weak_closure_classes", counts.weak_closure_classes},
                         {"weak_per_partition", counts.weak_per_partition}};
  o.ledger = ledger_from(compare_with_bounds(counts, k, r));
  return o;
}

Outcome run_bound(const BoundProblem& p) {
  Outcome o;
  const BoundValue b = evaluate_bound(p.formula, p.params);
  o.results = bound_json(b);
  if (p.count) o.ledger.push_back(ledger_entry(p.formula, b, *p.count, compare_count(*p.count, b)));
  return o;
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

std::string describe(const Json& v) {
  std::string s = v.dump();
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  return s;
}

/// Empty when the expectation holds, otherwise a short explanation.
std::string check_expectation(const Json& report, const Json& expect, int exit_code) {
  const std::string path = expect.at("path").get<std::string>();
  if (path == "exit_code") {
    const int want = expect.at("equals").get<int>();
    return want == exit_code ? "" : "exit code " + std::to_string(exit_code) + ", expected " + std::to_string(want);
  }
  const Json::json_pointer ptr(path);
  if (!report.contains(ptr)) return path + " missing";
  const Json& got = report.at(ptr);
  if (expect.contains("equals")) {
    if (got == expect.at("equals")) return "";
    return path + " = " + describe(got) + ", expected " + describe(expect.at("equals"));
  }
  if (expect.contains("approx")) {
    const double want = expect.at("approx").get<double>();
    const double tol = expect.at("tol").get<double>();
    if (!got.is_number()) return path + " is not a number";
    const double g = got.get<double>();
    if (std::fabs(g - want) <= tol) return "";
    std::ostringstream msg;
    msg << path << " = " << g << ", expected " << want << " +- " << tol;
    return msg.str();
  }
  if (expect.contains("size")) {
    const std::size_t want = expect.at("size").get<std::size_t>();
    if (got.size() == want) return "";
    return path + " has size " + std::to_string(got.size()) + ", expected " + std::to_string(want);
  }
  throw SchemaError("/expect", "expectation needs equals, approx or size");
}

}  // namespace

RunOutcome run_problem(const Problem& problem, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = std::visit(Overloaded{[](const OrbitProblem& p) { return run_orbit(p); },
                                    [](const SyncProblem& p) { return run_sync(p); },
                                    [](const LrsProblem& p) { return run_lrs(p); },
                                    [](const ExpPolyProblem& p) { return run_exppoly(p); },
                                    [](const IndepProblem& p) { return run_indep(p); },
                                    [](const UnitProblem& p) { return run_unit(p); },
                                    [](const BoundProblem& p) { return run_bound(p); }},
                         problem.payload);
  RunOutcome out;
  out.report["tool"] = tool_name;
  out.report["version"] = tool_version;
  out.report["kind"] = problem.kind;
  out.report["input"] = problem.input;
  out.report["seed"] = problem.seed;
  out.report["results"] = std::move(o.results);
  out.report["bounds_ledger"] = o.ledger;
  out.report["hypotheses_met"] = o.hypotheses_met;
  if (opts.timings) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    out.report["timings"] = {{"seconds", dt.count()}};
  }
  if (!ledger_holds(o.ledger))
    out.exit_code = 1;
  else if (!o.hypotheses_met)
    out.exit_code = 2;
  return out;
}

RunOutcome run_problem(const Json& doc, const RunOptions& opts) { return run_problem(parse_problem(doc, opts), opts); }

ReproduceOutcome reproduce_suite(const Json& manifest, const std::filesystem::path& base_dir, const RunOptions& opts) {
  if (!manifest.is_object()) throw SchemaError("/", "manifest must be a JSON object");
  for (const auto& [key, value] : manifest.items())
    if (key != "entries" && key != "description") throw SchemaError("/" + key, "unknown field");
  ReproduceOutcome out;
  Json entries = Json::array();
  const Json empty = Json::array();
  const Json& list = manifest.contains("entries") ? manifest.at("entries") : empty;
  if (!list.is_array()) throw SchemaError("/entries", "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& entry = list[i];
    const std::string where = "/entries/" + std::to_string(i);
    if (!entry.is_object() || !entry.contains("criterion") || !entry.contains("problem"))
      throw SchemaError(where, "entry needs criterion and problem");
    const std::string criterion = entry.at("criterion").get<std::string>();
    const std::string name = entry.value("name", std::string());
    Json doc = entry.at("problem");
    if (doc.is_string()) doc = read_json_file(base_dir / doc.get<std::string>());
    RunOutcome run;
    try {
      run = run_problem(doc, opts);
    } catch (const Error& e) {
      throw Error("criterion " + criterion + (name.empty() ? "" : " (" + name + ")") + ": " + e.what());
    }
    std::vector<std::string> failures;
    const Json expects = entry.value("expect", Json::array());
    for (const auto& ex : expects) {
      std::string f = check_expectation(run.report, ex, run.exit_code);
      if (!f.empty()) failures.push_back(std::move(f));
    }
    const int want_exit = entry.value("expect_exit", 0);
    if (run.exit_code != want_exit)
      failures.push_back("exit code " + std::to_string(run.exit_code) + ", expected " + std::to_string(want_exit));
    const bool passed = failures.empty();
    std::string line = std::string(passed ? "PASS" : "FAIL") + " criterion " + criterion;
    if (!name.empty()) line += " (" + name + ")";
    for (const auto& f : failures) line += "; " + f;
    out.lines.push_back(line);
    Json ej;
    ej["criterion"] = criterion;
    ej["name"] = name;
    ej["passed"] = passed;
    ej["failures"] = failures;
    entries.push_back(std::move(ej));
    if (!passed) out.exit_code = 1;
  }
  out.report["tool"] = tool_name;
  out.report["version"] = tool_version;
  out.report["entries"] = std::move(entries);
  out.report["passed"] = out.exit_code == 0;
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string(), std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace orbitlab
