#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/bigint.hpp"

namespace orbitlab {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const Rational& c);
  /// c * x^k
  static RatPoly monomial(const Rational& c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  RatPoly derivative() const;
  RatPoly monic() const;
  /// Integer-coefficient primitive polynomial with positive leading coefficient.
  RatPoly primitive() const;
  /// p(c x)
  RatPoly scale_argument(const Rational& c) const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& c, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& d, const RatPoly& a);
/// Monic gcd (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Product of the distinct irreducible factors, monic.
RatPoly squarefree_part(const RatPoly& f);
/// Yun decomposition f = c * prod_i a_i^i; entry i-1 holds monic a_i.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& f);

/// Determinant of a square rational matrix by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);
/// Resultant via the Sylvester determinant; both inputs nonzero.
Rational resultant(const RatPoly& f, const RatPoly& g);
/// Unique polynomial of degree < n through n points with distinct abscissae.
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace orbitlab
