#pragma once

#include <cstdint>
#include <optional>

#include "orbitlab/bigint.hpp"
#include "orbitlab/cyclotomic.hpp"

namespace orbitlab {

/// A nonzero number q * zeta_N^a with q a positive rational.
///
/// The root-of-unity part is kept in lowest terms: gcd(a, N) = 1, and N = 1
/// exactly when the value is a positive rational. Negative rationals are
/// folded in as zeta_2. Under this normal form structural equality is value
/// equality, and N is the multiplicative order of the root-of-unity part.
class MonomialScalar {
 public:
  /// The scalar 1.
  MonomialScalar();
  /// Any nonzero rational; the sign becomes zeta_2.
  explicit MonomialScalar(const Rational& q);
  MonomialScalar(const Rational& q, std::uint64_t conductor, std::int64_t exponent);

  const Rational& modulus() const noexcept { return q_; }
  std::uint64_t conductor() const noexcept { return conductor_; }
  std::uint64_t zeta_exponent() const noexcept { return exponent_; }

  bool is_root_of_unity() const { return q_ == 1; }
  bool is_one() const { return q_ == 1 && conductor_ == 1; }
  /// Conductor of the smallest cyclotomic field containing the value.
  std::uint64_t field_conductor() const noexcept;

  MonomialScalar inverse() const;
  MonomialScalar pow(long e) const;
  /// Root-of-unity exponent of this^e, i.e. a * e mod N, for arbitrary e.
  std::uint64_t zeta_exponent_of_power(const BigInt& e) const;

  CyclotomicNumber to_cyclotomic() const;

  friend MonomialScalar operator*(const MonomialScalar& x, const MonomialScalar& y);
  friend MonomialScalar operator/(const MonomialScalar& x, const MonomialScalar& y);
  friend bool operator==(const MonomialScalar& x, const MonomialScalar& y) = default;
  /// Arbitrary but fixed total order, for use as a map key.
  friend bool operator<(const MonomialScalar& x, const MonomialScalar& y);

 private:
  void normalize(std::int64_t exponent);

  Rational q_;
  std::uint64_t conductor_ = 1;
  std::uint64_t exponent_ = 0;
};

/// Multiplicative order of u / v when it is a root of unity (the rational
/// parts agree), otherwise empty.
std::optional<std::uint64_t> ratio_order(const MonomialScalar& u, const MonomialScalar& v);

/// Order of the group of roots of unity generated by all root-of-unity
/// ratios values[i] / values[j]; 1 when there is none.
std::uint64_t group_order_D(const std::vector<MonomialScalar>& values);

}  // namespace orbitlab
