#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/bounds.hpp"
#include "orbitlab/rational_poly.hpp"

namespace orbitlab {

/// u_{n+m} = a_1 u_{n+m-1} + ... + a_m u_n with a_m != 0.
class LinearRecurrence {
 public:
  LinearRecurrence(std::vector<Rational> coeffs, std::vector<Rational> init);

  std::size_t order() const noexcept { return a_.size(); }
  const std::vector<Rational>& coeffs() const noexcept { return a_; }
  const std::vector<Rational>& init() const noexcept { return u_; }
  /// x^m - a_1 x^{m-1} - ... - a_m
  RatPoly characteristic_polynomial() const;
  /// u_{-1}, u_{-2}, ..., u_{-count}
  std::vector<Rational> backward_terms(std::size_t count) const;

 private:
  std::vector<Rational> a_;
  std::vector<Rational> u_;
};

std::vector<Rational> lrs_terms(const LinearRecurrence& l, std::size_t count);

/// Rank of the m x m Hankel matrix of u_0, ..., u_{2m-2}.
std::size_t minimal_order(const LinearRecurrence& l);
/// The recurrence of minimal order generating the same sequence.
LinearRecurrence minimal_recurrence(const LinearRecurrence& l);

/// Res_y(f(y), f(xy)); its roots are the ratios of roots of f.
RatPoly ratio_polynomial(const RatPoly& f);

/// Order of the group generated by the roots of unity among ratios of roots
/// of f, found as the cyclotomic factors of the ratio polynomial.
std::uint64_t degeneracy_order(const RatPoly& f);

/// Res_y(f(y), x - y^D) made monic: the polynomial whose roots are the D-th
/// powers of the roots of f, with multiplicity.
RatPoly power_root_polynomial(const RatPoly& f, std::uint64_t d);

/// The subsequence v_t = u_{offset + t * stride}, with a recurrence it satisfies.
struct ResidueClass {
  std::uint64_t offset = 0;
  std::uint64_t stride = 1;
  std::vector<Rational> coeffs;
  std::vector<Rational> init;

  /// A recurrence with nonzero trailing coefficient and order-many leading
  /// zeros is identically zero.
  bool identically_zero() const;
  std::vector<Rational> terms(std::size_t count) const;
};

std::vector<ResidueClass> residue_decompose(const LinearRecurrence& l, std::uint64_t d);

/// Interleaves the residue classes back into the first `count` terms.
std::vector<Rational> recompose(const std::vector<ResidueClass>& classes, std::size_t count);

struct ArithmeticProgression {
  std::uint64_t offset;
  std::uint64_t difference;
  friend bool operator==(const ArithmeticProgression&, const ArithmeticProgression&) = default;
};

struct BoundCheck {
  std::string label;
  BoundValue bound;
  BigInt count;
  bool holds = false;
};

struct ZeroSetReport {
  std::vector<std::uint64_t> isolated;
  std::vector<ArithmeticProgression> progressions;
  std::uint64_t n_max = 0;
  std::uint64_t degeneracy = 1;
  bool simple = false;
  bool nondegenerate = false;
  std::size_t order = 0;
  std::vector<BoundCheck> bounds;

  /// Every zero in [0, n_max], isolated or on a progression.
  std::vector<std::uint64_t> all_zeros() const;
  bool ledger_ok() const;
};

ZeroSetReport zero_set(const LinearRecurrence& l, std::uint64_t n_max);

}  // namespace orbitlab
