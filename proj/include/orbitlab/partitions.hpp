#pragma once

#include <string>
#include <vector>

#include "orbitlab/bigint.hpp"

namespace orbitlab {

/// A set partition of {0, ..., k-1}; blocks are sorted and ordered by least element.
struct SetPartition {
  std::vector<std::vector<std::size_t>> blocks;

  std::size_t arity() const;
  bool suitable() const;
  /// True iff every block of this lies inside a block of coarser.
  bool refines(const SetPartition& coarser) const;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// 1-based block notation, e.g. "{12|34}".
std::string to_string(const SetPartition& p);

/// All set partitions of {0, ..., k-1} in restricted-growth-string order.
std::vector<SetPartition> set_partitions(std::size_t k);
/// Set partitions whose blocks all have size >= 2; k < 2 is a domain error.
std::vector<SetPartition> suitable_partitions(std::size_t k);
BigInt bell_number(std::size_t k);

}  // namespace orbitlab
