#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab {

using BoundParams = std::map<std::string, long>;

/// A possibly astronomically large bound, carried as an enclosure of its
/// natural logarithm. Doubly exponential formulas also carry log log.
struct BoundValue {
  std::string formula_id;
  BoundParams params;
  Interval log_value;
  std::optional<Interval> log_log;
  /// The integer value itself, when it is an integer of at most 10^6 bits.
  std::optional<BigInt> exact;

  /// Upper end of the natural-log enclosure, the directed-rounding value.
  double log_natural() const { return log_value.hi_double(); }
  double log10() const;
  /// log10 rendered with `digits` significant digits; works past double range.
  std::string log10_text(int digits = 12) const;
};

/// Formula ids accepted by evaluate_bound, in catalogue order.
const std::vector<std::string>& formula_ids();
/// Parameter names required by a formula id.
std::vector<std::string> formula_params(const std::string& formula_id);

/// Throws DomainError naming the formula or the offending parameter.
BoundValue evaluate_bound(const std::string& formula_id, const BoundParams& params);

/// True iff count < bound is certain under outward rounding.
bool compare_count(const BigInt& count, const BoundValue& bound);


}  // namespace orbitlab
