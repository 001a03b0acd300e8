#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "orbitlab/bounds.hpp"
#include "orbitlab/exppoly.hpp"
#include "orbitlab/intersection.hpp"
#include "orbitlab/lrs.hpp"
#include "orbitlab/unit_equations.hpp"

namespace orbitlab {

using Json = nlohmann::ordered_json;

/// Command-line overrides; they replace the matching problem-file fields.
struct RunOptions {
  std::optional<std::uint64_t> n_max;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> primes;
  std::optional<std::uint64_t> seed;
  bool timings = false;
  unsigned threads = 0;
};

const std::vector<std::string>& problem_kinds();

struct OrbitProblem {
  MonomialMap map;
  Point point;
  Hypersurface g;
  std::uint64_t n_max;
  ScanConfig scan;
};

struct SyncProblem {
  MonomialMap f;
  MonomialMap h;
  Point w1;
  Point w2;
  std::uint64_t n_max;
  ScanConfig scan;
};

struct LrsProblem {
  LinearRecurrence l;
  std::uint64_t n_max;
};

struct ExpPolyProblem {
  ExponentialPolynomial f;
  std::optional<CyclotomicNumber> mu;
  std::uint64_t n_max;
};

struct IndepProblem {
  std::vector<MonomialScalar> values;
};

struct UnitProblem {
  std::vector<CyclotomicNumber> coeffs;
  SubgroupGamma gamma;
  long box;
  UnitConfig cfg;
};

struct BoundProblem {
  std::string formula;
  BoundParams params;
  std::optional<BigInt> count;
};

using Payload =
    std::variant<OrbitProblem, SyncProblem, LrsProblem, ExpPolyProblem, IndepProblem, UnitProblem, BoundProblem>;

struct Problem {
  std::string kind;
  /// The problem document with overrides applied.
  Json input;
  std::uint64_t seed = 0;
  Payload payload;
};

/// Validates the document and builds the typed payload. Every failure is a
/// SchemaError naming the JSON path.
Problem parse_problem(const Json& doc, const RunOptions& overrides = {});

}  // namespace orbitlab
