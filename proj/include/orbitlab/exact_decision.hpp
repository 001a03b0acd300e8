#pragma once

#include <vector>

#include "orbitlab/cyclotomic.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

enum class ZeroVerdict { zero, nonzero, undecided };

struct DecisionConfig {
  /// Per-term size limit, in bits, for materialising rational parts.
  double cutoff_bits = 2e6;
  FactorConfig factor;
};

/// One summand c * v of a sum whose rational parts may be far too large to
/// write down: v is kept as a prime-exponent map with a root-of-unity part.
struct FactoredTerm {
  CyclotomicNumber coeff;
  FactoredScalar value;
};

/// Decides whether the sum of the terms vanishes. Terms with equal values are
/// merged first; the remaining sum is split into power-basis coordinates, each
/// a rational sum settled by an archimedean or p-adic dominance certificate or,
/// below the cutoff, by direct evaluation. Undecided only when no certificate
/// applies and some term is over the cutoff.
ZeroVerdict decide_zero(const std::vector<FactoredTerm>& terms, const DecisionConfig& cfg = {});

/// Estimated size in bits of the rational part of a factored value.
double factored_bits(const FactoredScalar& v);

/// The exact rational part of v; the caller checks the size first.
Rational materialise(const FactoredScalar& v);

}  // namespace orbitlab
