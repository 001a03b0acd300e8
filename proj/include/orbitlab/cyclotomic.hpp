#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/rational_poly.hpp"

namespace orbitlab {

using IntPoly = std::vector<BigInt>;  // low degree first

/// The N-th cyclotomic polynomial. Results are memoised.
const IntPoly& cyclotomic_polynomial(std::uint64_t n);
RatPoly cyclotomic_ratpoly(std::uint64_t n);

/// Exact element of Q(zeta_N), stored in the power basis 1, z, ..., z^(phi(N)-1)
/// reduced modulo the N-th cyclotomic polynomial.
///
/// Binary operations between different conductors lift both operands into
/// Q(zeta_lcm) first; results keep that lcm conductor (no automatic descent,
/// see minimal_conductor()).
class CyclotomicNumber {
 public:
  /// Zero of Q.
  CyclotomicNumber();
  CyclotomicNumber(const Rational& q);  // NOLINT: rationals embed implicitly
  CyclotomicNumber(long q);             // NOLINT

  /// Reduces an arbitrary polynomial in zeta_N.
  static CyclotomicNumber from_polynomial(std::uint64_t conductor, const std::vector<Rational>& coeffs);
  /// Takes coefficients that are already reduced (length must equal phi(N)).
  static CyclotomicNumber from_basis(std::uint64_t conductor, std::vector<Rational> coeffs);
  static CyclotomicNumber zeta(std::uint64_t conductor, std::int64_t exponent = 1);

  std::uint64_t conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws DomainError unless is_rational().
  Rational rational_value() const;

  /// Same value in Q(zeta_M); requires conductor() | M.
  CyclotomicNumber lift(std::uint64_t target) const;
  /// Image under zeta -> zeta^k, gcd(k, N) = 1.
  CyclotomicNumber galois_conjugate(std::uint64_t k) const;
  /// Least M such that the value lies in Q(zeta_M).
  std::uint64_t minimal_conductor() const;
  /// Same value represented with conductor minimal_conductor().
  CyclotomicNumber descend() const;

  /// this * zeta_M^e for any M (the result lives in the lcm conductor).
  CyclotomicNumber times_zeta(std::uint64_t m, std::int64_t e) const;
  CyclotomicNumber scaled(const Rational& q) const;
  CyclotomicNumber inverse() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& b);
  CyclotomicNumber& operator*=(const CyclotomicNumber& b);

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  CyclotomicNumber(std::uint64_t conductor, std::vector<Rational> coeffs);
  static std::vector<Rational> reduce(std::uint64_t conductor, std::vector<Rational> poly);

  std::uint64_t conductor_;
  std::vector<Rational> coeffs_;
};

enum class FieldOp { add, mul, neg, inv };

CyclotomicNumber field_op(FieldOp kind, const CyclotomicNumber& x,
                          const std::optional<CyclotomicNumber>& y = std::nullopt);

}  // namespace orbitlab
