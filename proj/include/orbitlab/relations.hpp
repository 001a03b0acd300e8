#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/monomial_scalar.hpp"

namespace orbitlab {

struct FactorConfig {
  /// Trial division bound; a cofactor left above it must be a prime.
  std::uint64_t trial_limit = 1'000'000;
};

/// Prime factorisation of |n| (n != 0) as (prime, multiplicity), primes
/// increasing. Throws DomainError if a composite cofactor survives trial
/// division.
std::vector<std::pair<BigInt, unsigned long>> factor_integer(const BigInt& n, const FactorConfig& cfg = {});

/// q * zeta with q kept as a prime-exponent map, so that powers with huge
/// exponents can be formed and compared without materialising them.
class FactoredScalar {
 public:
  FactoredScalar() = default;
  explicit FactoredScalar(const MonomialScalar& s, const FactorConfig& cfg = {});

  FactoredScalar pow(const BigInt& e) const;
  friend FactoredScalar operator*(const FactoredScalar& x, const FactoredScalar& y);
  friend bool operator==(const FactoredScalar& x, const FactoredScalar& y) = default;
  friend bool operator<(const FactoredScalar& x, const FactoredScalar& y);

  const std::map<BigInt, BigInt>& prime_exponents() const noexcept { return primes_; }
  std::uint64_t conductor() const noexcept { return conductor_; }
  std::uint64_t zeta_exponent() const noexcept { return exponent_; }
  /// p-adic valuation.
  BigInt valuation(const BigInt& p) const;
  bool is_one() const { return primes_.empty() && conductor_ == 1; }

 private:
  void normalize_root();

  std::map<BigInt, BigInt> primes_;
  std::uint64_t conductor_ = 1;
  std::uint64_t exponent_ = 0;
};

/// Basis of the integer kernel {k : A k = 0} of an integer matrix with n
/// columns, in Hermite normal form (rows).
IntMatrix integer_kernel(const IntMatrix& a, std::size_t n);
/// Row Hermite normal form of the lattice spanned by the given rows;
/// zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Lattice of multiplicative relations {k : prod values_i^{k_i} = 1}.
struct RelationLattice {
  std::size_t dimension = 0;
  IntMatrix basis;
  bool trivial() const { return basis.empty(); }
};

RelationLattice multiplicative_relations(const std::vector<MonomialScalar>& values, const FactorConfig& cfg = {});

/// Relations among tuples: {e : prod_t tuples[t]^{e_t} = (1, ..., 1)}.
RelationLattice multiplicative_relations_stacked(const std::vector<std::vector<MonomialScalar>>& tuples,
                                                 const FactorConfig& cfg = {});

/// True iff prod values_i^{k_i} = 1, decided on factored representations.
bool verify_relation(const std::vector<MonomialScalar>& values, const IntVector& k, const FactorConfig& cfg = {});

struct IndependenceResult {
  bool independent = true;
  /// A nonzero relation, present iff !independent; already re-verified.
  std::optional<IntVector> certificate;
  RelationLattice lattice;
};

IndependenceResult is_multiplicatively_independent(const std::vector<MonomialScalar>& values,
                                                   const FactorConfig& cfg = {});

}  // namespace orbitlab
