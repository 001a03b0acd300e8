#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbitlab/cyclotomic.hpp"
#include "orbitlab/lrs.hpp"
#include "orbitlab/monomial_scalar.hpp"
#include "orbitlab/partitions.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

using Tuple = std::vector<MonomialScalar>;

/// Subgroup of (K*)^k generated by r tuples.
class SubgroupGamma {
 public:
  explicit SubgroupGamma(std::vector<Tuple> generators);

  std::size_t arity() const noexcept { return k_; }
  const std::vector<Tuple>& generators() const noexcept { return gens_; }
  /// Generators minus the dimension of their relation lattice.
  std::size_t rank() const noexcept { return rank_; }
  Tuple element(const std::vector<long>& e) const;

 private:
  std::size_t k_ = 0;
  std::vector<Tuple> gens_;
  std::size_t rank_ = 0;
};

struct UnitSolution {
  std::vector<long> exponents;
  Tuple x;
  bool nondegenerate = false;
};

struct UnitConfig {
  std::uint64_t budget = 10'000'000;
  std::size_t max_arity = 12;
  unsigned threads = 0;
};

/// Sum of a_i x_i over the indices in mask.
CyclotomicNumber subsum(const std::vector<CyclotomicNumber>& a, const Tuple& x, std::uint64_t mask);

/// All e in [-B, B]^r whose tuple solves a_1 x_1 + ... + a_k x_k = 0.
std::vector<UnitSolution> enumerate_solutions(const std::vector<CyclotomicNumber>& a, const SubgroupGamma& gamma,
                                              long box, const UnitConfig& cfg = {});

struct ProportionalityClass {
  Tuple representative;  // x / x_1
  std::vector<std::size_t> members;
};

std::vector<ProportionalityClass> proportionality_classes(const std::vector<UnitSolution>& solutions);

struct PartitionClasses {
  SetPartition partition;
  /// Solutions of the refined system solving no proper refinement.
  std::vector<std::size_t> members;
  std::size_t classes = 0;
};

struct WeakProportionalityReport {
  /// Suitable partitions each solution satisfies block-wise.
  std::vector<std::vector<SetPartition>> solved;
  /// Classes of the transitive closure of weak proportionality.
  std::vector<std::vector<std::size_t>> closure_classes;
  std::vector<PartitionClasses> per_partition;
  std::size_t per_partition_total() const;
};

WeakProportionalityReport weak_proportionality_classes(const std::vector<UnitSolution>& solutions,
                                                       const std::vector<CyclotomicNumber>& a);

struct UnitCounts {
  std::size_t nondegenerate_classes = 0;
  std::size_t weak_closure_classes = 0;
  std::size_t weak_per_partition = 0;
};

UnitCounts unit_counts(const std::vector<UnitSolution>& solutions,
                       const std::vector<ProportionalityClass>& classes, const WeakProportionalityReport& weak);

std::vector<BoundCheck> compare_with_bounds(const UnitCounts& counts, std::size_t k, std::size_t r);

}  // namespace orbitlab
