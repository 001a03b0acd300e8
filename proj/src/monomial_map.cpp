#include "orbitlab/monomial_map.hpp"

#include <set>

#include "orbitlab/errors.hpp"

namespace orbitlab {

MonomialMap::MonomialMap(IntMatrix exponents) : s_(std::move(exponents)) {
  if (s_.empty()) throw DomainError("monomial map needs dimension at least 1");
  for (const auto& row : s_) {
    if (row.size() != s_.size()) throw DomainError("exponent matrix must be square");
    for (const auto& e : row)
      if (e < 0) throw DomainError("exponents must be non-negative");
  }
}

BigInt MonomialMap::degree(std::size_t i) const {
  BigInt d = 0;
  for (const auto& e : s_.at(i)) d += e;
  return d;
}

bool MonomialMap::is_diagonal() const {
  for (std::size_t i = 0; i < s_.size(); ++i)
    for (std::size_t j = 0; j < s_.size(); ++j)
      if (i != j && s_[i][j] != 0) return false;
  return true;
}

std::optional<BigInt> MonomialMap::power_map_degree() const {
  if (!is_diagonal()) return std::nullopt;
  for (std::size_t i = 1; i < s_.size(); ++i)
    if (s_[i][i] != s_[0][0]) return std::nullopt;
  return s_[0][0];
}

MonomialMap MonomialMap::product(const MonomialMap& f, const MonomialMap& h) {
  const std::size_t m = f.dimension(), k = h.dimension();
  IntMatrix s(m + k, IntVector(m + k, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s[i][j] = f.s_[i][j];
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s[m + i][m + j] = h.s_[i][j];
  return MonomialMap(std::move(s));
}

IntMatrix compose_power(const MonomialMap& map, std::uint64_t n) {
  IntMatrix result = identity_matrix(map.dimension());
  IntMatrix base = map.exponents();
  while (n != 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n != 0) base = multiply(base, base);
  }
  return result;
}

Hypersurface::Hypersurface(std::size_t dimension, std::vector<HypersurfaceTerm> terms)
    : m_(dimension), terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("hypersurface needs at least one term");
  std::set<IntVector> seen;
  for (const auto& t : terms_) {
    if (t.exps.size() != m_) throw DomainError("exponent vector length must equal the dimension");
    for (const auto& e : t.exps)
      if (e < 0) throw DomainError("hypersurface exponents must be non-negative");
    if (t.coeff.is_zero()) throw DomainError("hypersurface coefficients must be nonzero");
    if (!seen.insert(t.exps).second) throw DomainError("hypersurface exponent vectors must be distinct");
  }
}

std::optional<std::size_t> Hypersurface::constant_term() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    bool zero = true;
    for (const auto& e : terms_[i].exps) zero = zero && e == 0;
    if (zero) return i;
  }
  return std::nullopt;
}

BigInt Hypersurface::total_degree() const {
  BigInt best = 0;
  for (const auto& t : terms_) {
    BigInt d = 0;
    for (const auto& e : t.exps) d += e;
    if (d > best) best = d;
  }
  return best;
}

IntVector orbit_exponents(const IntVector& exps, const IntMatrix& power) {
  const std::size_t m = power.size();
  IntVector out(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (exps[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) out[j] += exps[i] * power[i][j];
  }
  return out;
}

MonomialScalar monomial_value(const Point& w, const IntVector& e) {
  MonomialScalar out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (e[j] == 0) continue;
    if (!e[j].fits_slong_p()) throw ResourceError("exponent too large to materialise");
    out = out * w[j].pow(e[j].get_si());
  }
  return out;
}

MonomialScalar OrbitPoint::coordinate(std::size_t i) const { return monomial_value(base, power.at(i)); }

Point OrbitPoint::coordinates() const {
  Point out;
  for (std::size_t i = 0; i < base.size(); ++i) out.push_back(coordinate(i));
  return out;
}

OrbitPoint orbit_point(const MonomialMap& map, const Point& w, std::uint64_t n) {
  if (w.size() != map.dimension()) throw DomainError("point dimension does not match the map");
  return {w, n, compose_power(map, n)};
}

}  // namespace orbitlab
