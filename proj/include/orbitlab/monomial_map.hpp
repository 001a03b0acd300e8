#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitlab/bigint.hpp"
#include "orbitlab/cyclotomic.hpp"
#include "orbitlab/monomial_scalar.hpp"

namespace orbitlab {

using Point = std::vector<MonomialScalar>;

/// Monomial self-map of affine m-space; row i of the exponent matrix holds
/// the exponents of X_1, ..., X_m in F_i.
class MonomialMap {
 public:
  explicit MonomialMap(IntMatrix exponents);

  std::size_t dimension() const noexcept { return s_.size(); }
  const IntMatrix& exponents() const noexcept { return s_; }
  /// deg F_i, the row sum.
  BigInt degree(std::size_t i) const;
  bool is_diagonal() const;
  /// The common exponent d when the map is (X_1^d, ..., X_m^d).
  std::optional<BigInt> power_map_degree() const;

  /// (F, H) acting on disjoint variable blocks.
  static MonomialMap product(const MonomialMap& f, const MonomialMap& h);

 private:
  IntMatrix s_;
};

/// S^n by binary exponentiation; S^0 is the identity.
IntMatrix compose_power(const MonomialMap& map, std::uint64_t n);

struct HypersurfaceTerm {
  CyclotomicNumber coeff;
  IntVector exps;
};

/// Sparse polynomial G with nonzero coefficients and distinct exponent vectors.
class Hypersurface {
 public:
  Hypersurface(std::size_t dimension, std::vector<HypersurfaceTerm> terms);

  std::size_t dimension() const noexcept { return m_; }
  const std::vector<HypersurfaceTerm>& terms() const noexcept { return terms_; }
  /// Number of monomials, the constant term included.
  std::size_t monomial_count() const noexcept { return terms_.size(); }
  std::optional<std::size_t> constant_term() const;
  BigInt total_degree() const;

 private:
  std::size_t m_;
  std::vector<HypersurfaceTerm> terms_;
};

struct OrbitPoint {
  Point base;
  std::uint64_t step = 0;
  IntMatrix power;  // S^step

  /// Coordinate i of Phi^(step)(base); materialises a possibly large rational.
  MonomialScalar coordinate(std::size_t i) const;
  Point coordinates() const;
};

OrbitPoint orbit_point(const MonomialMap& map, const Point& w, std::uint64_t n);

/// Exponent vector of the monomial X^exps evaluated on the orbit, in terms of
/// the base point: E = exps * S^n.
IntVector orbit_exponents(const IntVector& exps, const IntMatrix& power);

/// prod_j w_j^{e_j}; negative exponents allowed.
MonomialScalar monomial_value(const Point& w, const IntVector& e);

}  // namespace orbitlab
