#include "orbitlab/problem.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "orbitlab/errors.hpp"
#include "orbitlab/scalar_io.hpp"

namespace orbitlab {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& field(const Json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) throw SchemaError(child(path, key), "required field is missing");
  return obj.at(key);
}

void allow_only(const Json& obj, const std::string& path, const std::set<std::string>& keys) {
  if (!obj.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (!keys.contains(key)) throw SchemaError(child(path, key), "unknown field");
}

const Json& array(const Json& v, const std::string& path, bool nonempty = true) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  if (nonempty && v.empty()) throw SchemaError(path, "array must not be empty");
  return v;
}

std::uint64_t unsigned_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0))
    throw SchemaError(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

long signed_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(LONG_MAX))
    throw SchemaError(path, "integer out of range");
  return v.get<long>();
}

/// Integers may be given as JSON numbers or decimal strings.
BigInt big_int(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()))
                                                           : BigInt(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    try {
      return BigInt(v.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError(path, "not an integer: \"" + v.get<std::string>() + "\"");
    }
  }
  throw SchemaError(path, "expected an integer");
}

template <typename Parse>
auto scalar(const Json& v, const std::string& path, Parse parse) {
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number_integer())
    text = v.dump();
  else
    throw SchemaError(path, "expected a scalar string");
  try {
    return parse(text);
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

Rational rational(const Json& v, const std::string& path) {
  return scalar(v, path, [](const std::string& t) { return parse_rational(t); });
}
MonomialScalar monomial(const Json& v, const std::string& path) {
  return scalar(v, path, [](const std::string& t) { return parse_monomial_scalar(t); });
}
CyclotomicNumber cyclotomic(const Json& v, const std::string& path) {
  return scalar(v, path, [](const std::string& t) { return parse_cyclotomic(t); });
}

template <typename T, typename Parse>
std::vector<T> list(const Json& v, const std::string& path, Parse parse, bool nonempty = true) {
  std::vector<T> out;
  array(v, path, nonempty);
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(parse(v[i], child(path, i)));
  return out;
}

/// Wraps library domain errors raised while building a payload object.
template <typename Build>
auto build(const std::string& path, Build make) {
  try {
    return make();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

MonomialMap map_at(const Json& obj, const std::string& path, const std::string& key) {
  const std::string p = child(path, key);
  const auto rows = list<IntVector>(field(obj, path, key), p, [](const Json& row, const std::string& rp) {
    return list<BigInt>(row, rp, big_int);
  });
  return build(p, [&] { return MonomialMap(rows); });
}

Point point_at(const Json& obj, const std::string& path, const std::string& key) {
  return list<MonomialScalar>(field(obj, path, key), child(path, key), monomial);
}

Hypersurface hypersurface_at(const Json& obj, const std::string& path, std::size_t dim) {
  const std::string p = child(path, "hypersurface");
  const Json& terms = array(field(obj, path, "hypersurface"), p);
  std::vector<HypersurfaceTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = child(p, i);
    allow_only(terms[i], tp, {"coeff", "exps"});
    HypersurfaceTerm t{cyclotomic(field(terms[i], tp, "coeff"), child(tp, "coeff")),
                       list<BigInt>(field(terms[i], tp, "exps"), child(tp, "exps"), big_int, false)};
    if (t.exps.size() != dim)
      throw SchemaError(child(tp, "exps"), "expected " + std::to_string(dim) + " exponents");
    out.push_back(std::move(t));
  }
  return build(p, [&] { return Hypersurface(dim, std::move(out)); });
}

ScanConfig scan_config(const Json& obj, const std::string& path, unsigned threads) {
  ScanConfig cfg;
  cfg.threads = threads;
  if (obj.contains("mode")) {
    const Json& m = obj.at("mode");
    if (!m.is_string()) throw SchemaError(child(path, "mode"), "expected a string");
    try {
      cfg.mode = parse_scan_mode(m.get<std::string>());
    } catch (const Error& e) {
      throw SchemaError(child(path, "mode"), e.what());
    }
  }
  if (obj.contains("primes")) {
    cfg.prime_count = unsigned_int(obj.at("primes"), child(path, "primes"));
    if (cfg.prime_count == 0) throw SchemaError(child(path, "primes"), "need at least one prime");
  }
  if (obj.contains("seed")) cfg.seed = unsigned_int(obj.at("seed"), child(path, "seed"));
  return cfg;
}

std::uint64_t n_max_at(const Json& obj, const std::string& path) {
  return unsigned_int(field(obj, path, "n_max"), child(path, "n_max"));
}

ExponentialPolynomial exppoly_at(const Json& obj, const std::string& path) {
  const std::string p = child(path, "terms");
  const Json& terms = array(field(obj, path, "terms"), p);
  std::vector<ExpTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = child(p, i);
    allow_only(terms[i], tp, {"poly", "alpha"});
    out.push_back({list<CyclotomicNumber>(field(terms[i], tp, "poly"), child(tp, "poly"), cyclotomic),
                   monomial(field(terms[i], tp, "alpha"), child(tp, "alpha"))});
  }
  return build(p, [&] { return ExponentialPolynomial(std::move(out)); });
}

const std::set<std::string> scan_fields = {"kind", "n_max", "mode", "primes", "seed"};

std::set<std::string> with(std::set<std::string> base, std::initializer_list<std::string> extra) {
  base.insert(extra);
  return base;
}

}  // namespace

const std::vector<std::string>& problem_kinds() {
  static const std::vector<std::string> kinds = {"orbit-intersect", "sync-orbits", "lrs-zeros", "exppoly-zeros",
                                                 "value-set",       "indep-check", "unit-solve", "bound-calc"};
  return kinds;
}

Problem parse_problem(const Json& source, const RunOptions& overrides) {
  Json doc = source;
  const std::string root;
  if (!doc.is_object()) throw SchemaError("/", "problem must be a JSON object");
  const Json& kind_v = field(doc, root, "kind");
  if (!kind_v.is_string()) throw SchemaError("/kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  const auto& kinds = problem_kinds();
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw SchemaError("/kind", "unknown kind \"" + kind + "\"");

  const bool scans = kind == "orbit-intersect" || kind == "sync-orbits";
  const bool bounded = scans || kind == "lrs-zeros" || kind == "exppoly-zeros" || kind == "value-set";
  if (overrides.n_max) {
    if (!bounded) throw SchemaError("/n_max", "--n-max does not apply to kind " + kind);
    doc["n_max"] = *overrides.n_max;
  }
  if (overrides.mode || overrides.primes) {
    if (!scans) throw SchemaError("/mode", "--mode and --primes apply only to orbit scans");
    if (overrides.mode) doc["mode"] = *overrides.mode;
    if (overrides.primes) doc["primes"] = *overrides.primes;
  }
  if (overrides.seed) doc["seed"] = *overrides.seed;

  std::uint64_t seed = 0;
  if (doc.contains("seed")) seed = unsigned_int(doc.at("seed"), "/seed");

  auto make = [&](Payload payload) { return Problem{kind, doc, seed, std::move(payload)}; };

  if (kind == "orbit-intersect") {
    allow_only(doc, root, with(scan_fields, {"map", "point", "hypersurface"}));
    MonomialMap map = map_at(doc, root, "map");
    Point w = point_at(doc, root, "point");
    if (w.size() != map.dimension()) throw SchemaError("/point", "point dimension differs from the map");
    Hypersurface g = hypersurface_at(doc, root, map.dimension());
    return make(OrbitProblem{std::move(map), std::move(w), std::move(g), n_max_at(doc, root),
                             scan_config(doc, root, overrides.threads)});
  }
  if (kind == "sync-orbits") {
    allow_only(doc, root, with(scan_fields, {"map_f", "map_h", "point_1", "point_2"}));
    MonomialMap f = map_at(doc, root, "map_f");
    MonomialMap h = map_at(doc, root, "map_h");
    if (f.dimension() != h.dimension()) throw SchemaError("/map_h", "maps must have the same dimension");
    Point w1 = point_at(doc, root, "point_1");
    Point w2 = point_at(doc, root, "point_2");
    if (w1.size() != f.dimension()) throw SchemaError("/point_1", "point dimension differs from the map");
    if (w2.size() != h.dimension()) throw SchemaError("/point_2", "point dimension differs from the map");
    return make(SyncProblem{std::move(f), std::move(h), std::move(w1), std::move(w2), n_max_at(doc, root),
                            scan_config(doc, root, overrides.threads)});
  }
  if (kind == "lrs-zeros") {
    allow_only(doc, root, {"kind", "coeffs", "init", "n_max", "seed"});
    auto a = list<Rational>(field(doc, root, "coeffs"), "/coeffs", rational);
    auto u = list<Rational>(field(doc, root, "init"), "/init", rational);
    LinearRecurrence l = build("/coeffs", [&] { return LinearRecurrence(a, u); });
    return make(LrsProblem{std::move(l), n_max_at(doc, root)});
  }
  if (kind == "exppoly-zeros" || kind == "value-set") {
    const bool value = kind == "value-set";
    allow_only(doc, root, value ? std::set<std::string>{"kind", "terms", "mu", "n_max", "seed"}
                                : std::set<std::string>{"kind", "terms", "n_max", "seed"});
    ExponentialPolynomial f = exppoly_at(doc, root);
    std::optional<CyclotomicNumber> mu;
    if (value) {
      mu = cyclotomic(field(doc, root, "mu"), "/mu");
      if (mu->is_zero()) throw SchemaError("/mu", "mu must be nonzero");
    }
    return make(ExpPolyProblem{std::move(f), std::move(mu), n_max_at(doc, root)});
  }
  if (kind == "indep-check") {
    allow_only(doc, root, {"kind", "values", "seed"});
    return make(IndepProblem{list<MonomialScalar>(field(doc, root, "values"), "/values", monomial)});
  }
  if (kind == "unit-solve") {
    allow_only(doc, root, {"kind", "coeffs", "generators", "box", "budget", "seed"});
    auto a = list<CyclotomicNumber>(field(doc, root, "coeffs"), "/coeffs", cyclotomic);
    auto gens = list<Tuple>(field(doc, root, "generators"), "/generators", [](const Json& t, const std::string& p) {
      return list<MonomialScalar>(t, p, monomial);
    });
    SubgroupGamma gamma = build("/generators", [&] { return SubgroupGamma(gens); });
    if (gamma.arity() != a.size()) throw SchemaError("/generators", "generator arity differs from coefficient count");
    const long box = signed_int(field(doc, root, "box"), "/box");
    if (box < 0) throw SchemaError("/box", "box radius must be >= 0");
    UnitConfig cfg;
    cfg.threads = overrides.threads;
    if (doc.contains("budget")) cfg.budget = unsigned_int(doc.at("budget"), "/budget");
    return make(UnitProblem{std::move(a), std::move(gamma), box, cfg});
  }
  // bound-calc: formula parameters are top-level integer fields.
  const Json& formula_v = field(doc, root, "formula");
  if (!formula_v.is_string()) throw SchemaError("/formula", "expected a string");
  const std::string formula = formula_v.get<std::string>();
  const auto& ids = formula_ids();
  if (std::find(ids.begin(), ids.end(), formula) == ids.end())
    throw SchemaError("/formula", "unknown formula id \"" + formula + "\"");
  std::set<std::string> allowed = {"kind", "formula", "count", "seed"};
  BoundParams params;
  for (const auto& name : formula_params(formula)) {
    allowed.insert(name);
    params[name] = signed_int(field(doc, root, name), "/" + name);
  }
  allow_only(doc, root, allowed);
  std::optional<BigInt> count;
  if (doc.contains("count")) {
    count = big_int(doc.at("count"), "/count");
    if (*count < 0) throw SchemaError("/count", "count must be >= 0");
  }
  build("/formula", [&] { return evaluate_bound(formula, params); });
  return make(BoundProblem{formula, std::move(params), std::move(count)});
}

}  // namespace orbitlab
