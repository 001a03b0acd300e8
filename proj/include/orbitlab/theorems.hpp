#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/bounds.hpp"
#include "orbitlab/monomial_map.hpp"

namespace orbitlab {

struct ConditionCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct TheoremCheck {
  std::string theorem;  // "3.1" ... "3.7"
  bool applies = false;
  std::vector<ConditionCheck> conditions;
  std::optional<BoundValue> bound;
};

struct TheoremBound {
  std::string theorem;
  BoundValue bound;
};

/// Checks the hypotheses of every intersection theorem for (map, G, w) and
/// attaches the bound of each one that applies. Failures are reported by
/// condition name, never thrown.
std::vector<TheoremCheck> applicable_theorems(const MonomialMap& map, const Hypersurface& g, const Point& w);

/// Bounds of the applicable theorems only.
std::vector<TheoremBound> applicable_bounds(const std::vector<TheoremCheck>& checks);

/// Degree phi(N') of the cyclotomic field generated by the coordinates of w
/// and the coefficients of G.
std::uint64_t field_degree(const Hypersurface& g, const Point& w);

}  // namespace orbitlab
