#include "orbitlab/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

IntPoly compute_cyclotomic(std::uint64_t n) {
  // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}: multiply first, then divide exactly.
  IntPoly p{1};
  std::vector<std::uint64_t> numer, denom;
  for (std::uint64_t d : divisors(n)) {
    int mu = mobius(n / d);
    if (mu == 1) numer.push_back(d);
    if (mu == -1) denom.push_back(d);
  }
  for (std::uint64_t d : numer) {
    IntPoly q(p.size() + d, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k + d] += p[k];
      q[k] -= p[k];
    }
    p = std::move(q);
  }
  for (std::uint64_t d : denom) {
    // p = q * (x^d - 1); recover q from the top down.
    const std::size_t qlen = p.size() - d;
    IntPoly q(qlen, 0);
    IntPoly rem = p;
    for (std::size_t k = p.size(); k-- > d;) {
      q[k - d] = rem[k];
      rem[k] -= q[k - d];
      rem[k - d] += q[k - d];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial index must be positive");
  static std::mutex mu;
  static std::map<std::uint64_t, IntPoly> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

RatPoly cyclotomic_ratpoly(std::uint64_t n) {
  const IntPoly& p = cyclotomic_polynomial(n);
  std::vector<Rational> c(p.begin(), p.end());
  return RatPoly(std::move(c));
}

CyclotomicNumber::CyclotomicNumber() : conductor_(1), coeffs_{Rational(0)} {}

CyclotomicNumber::CyclotomicNumber(const Rational& q) : conductor_(1), coeffs_{q} {}

CyclotomicNumber::CyclotomicNumber(long q) : conductor_(1), coeffs_{Rational(q)} {}

CyclotomicNumber::CyclotomicNumber(std::uint64_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

std::vector<Rational> CyclotomicNumber::reduce(std::uint64_t conductor, std::vector<Rational> poly) {
  const std::size_t phi = euler_phi(conductor);
  // Fold modulo x^N - 1 first; Phi_N divides it.
  if (poly.size() > conductor) {
    for (std::size_t k = conductor; k < poly.size(); ++k) poly[k % conductor] += poly[k];
    poly.resize(conductor);
  }
  if (poly.size() > phi) {
    const IntPoly& cyc = cyclotomic_polynomial(conductor);
    for (std::size_t k = poly.size(); k-- > phi;) {
      if (poly[k] == 0) continue;
      Rational c = poly[k];
      for (std::size_t j = 0; j <= phi; ++j)
        if (cyc[j] != 0) poly[k - phi + j] -= c * cyc[j];
    }
  }
  poly.resize(phi, 0);
  return poly;
}

CyclotomicNumber CyclotomicNumber::from_polynomial(std::uint64_t conductor,
                                                   const std::vector<Rational>& coeffs) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  return CyclotomicNumber(conductor, reduce(conductor, coeffs));
}

CyclotomicNumber CyclotomicNumber::from_basis(std::uint64_t conductor, std::vector<Rational> coeffs) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  if (coeffs.size() != euler_phi(conductor))
    throw DomainError("cyclotomic coefficient list must have length phi(" + std::to_string(conductor) + ")");
  return CyclotomicNumber(conductor, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::zeta(std::uint64_t conductor, std::int64_t exponent) {
  if (conductor == 0) throw DomainError("conductor must be positive");
  auto e = static_cast<std::size_t>(floor_mod(exponent, static_cast<std::int64_t>(conductor)));
  std::vector<Rational> poly(e + 1, 0);
  poly[e] = 1;
  return from_polynomial(conductor, poly);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::lift(std::uint64_t target) const {
  if (target % conductor_ != 0) throw DomainError("lift target must be a multiple of the conductor");
  if (target == conductor_) return *this;
  const std::uint64_t step = target / conductor_;
  std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) poly[k * step] = coeffs_[k];
  return CyclotomicNumber(target, reduce(target, std::move(poly)));
}

CyclotomicNumber CyclotomicNumber::galois_conjugate(std::uint64_t k) const {
  if (gcd_u64(k % conductor_, conductor_) != 1 && conductor_ != 1)
    throw DomainError("Galois exponent must be coprime to the conductor");
  std::vector<Rational> poly(conductor_, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) poly[(j * k) % conductor_] += coeffs_[j];
  return CyclotomicNumber(conductor_, reduce(conductor_, std::move(poly)));
}

std::uint64_t CyclotomicNumber::minimal_conductor() const {
  // x lies in Q(zeta_M) iff it is fixed by every sigma_k with k = 1 (mod M).
  for (std::uint64_t m : divisors(conductor_)) {
    bool fixed = true;
    for (std::uint64_t k = 1 + m; k < conductor_ && fixed; k += m) {
      if (gcd_u64(k, conductor_) != 1) continue;
      fixed = galois_conjugate(k) == *this;
    }
    if (fixed) return m;
  }
  return conductor_;
}

CyclotomicNumber CyclotomicNumber::descend() const {
  const std::uint64_t m = minimal_conductor();
  if (m == conductor_) return *this;
  // Solve for the representative in Q(zeta_m): lifting is injective and linear,
  // so match coefficients of the lifted basis by Gaussian elimination.
  const std::size_t phi_m = euler_phi(m);
  std::vector<std::vector<Rational>> columns;
  for (std::size_t j = 0; j < phi_m; ++j) columns.push_back(zeta(m, static_cast<std::int64_t>(j)).lift(conductor_).coeffs());
  const std::size_t rows = coeffs_.size();
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(phi_m + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < phi_m; ++j) aug[r][j] = columns[j][r];
    aug[r][phi_m] = coeffs_[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < phi_m && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && aug[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      Rational f = aug[r][col] / aug[row][col];
      for (std::size_t j = col; j <= phi_m; ++j) aug[r][j] -= f * aug[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<Rational> sol(phi_m, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = aug[r][phi_m] / aug[r][pivot_col[r]];
  return CyclotomicNumber(m, std::move(sol));
}

CyclotomicNumber CyclotomicNumber::times_zeta(std::uint64_t m, std::int64_t e) const {
  const std::uint64_t n = lcm_u64(conductor_, m);
  CyclotomicNumber base = lift(n);
  const auto shift = static_cast<std::size_t>(
      floor_mod(floor_mod(e, static_cast<std::int64_t>(m)) * static_cast<std::int64_t>(n / m),
                static_cast<std::int64_t>(n)));
  if (shift == 0) return base;
  std::vector<Rational> poly(n, 0);
  for (std::size_t k = 0; k < base.coeffs_.size(); ++k) poly[(k + shift) % n] = base.coeffs_[k];
  return CyclotomicNumber(n, reduce(n, std::move(poly)));
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& q) const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x *= q;
  return CyclotomicNumber(conductor_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (conductor_ == 1 || is_rational()) {
    std::vector<Rational> c(coeffs_.size(), 0);
    c[0] = 1 / coeffs_[0];
    return CyclotomicNumber(conductor_, std::move(c));
  }
  // Extended Euclid: s * x + t * Phi_N = 1.
  RatPoly r0 = cyclotomic_ratpoly(conductor_);
  RatPoly r1(coeffs_);
  RatPoly s0, s1 = RatPoly::constant(1);
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  RatPoly inv = r1.leading() == 0 ? RatPoly{} : (1 / r1.leading()) * s1;
  return from_polynomial(conductor_, inv.coeffs());
}

CyclotomicNumber CyclotomicNumber::operator-() const { return scaled(-1); }

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const std::uint64_t n = lcm_u64(a.conductor_, b.conductor_);
  CyclotomicNumber x = a.lift(n);
  const CyclotomicNumber y = b.lift(n);
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
  return x;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const std::uint64_t n = lcm_u64(a.conductor_, b.conductor_);
  const CyclotomicNumber x = a.lift(n);
  const CyclotomicNumber y = b.lift(n);
  if (n == 1) return CyclotomicNumber(x.coeffs_[0] * y.coeffs_[0]);
  std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
      if (y.coeffs_[j] != 0) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return CyclotomicNumber(n, CyclotomicNumber::reduce(n, std::move(prod)));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b.inverse(); }

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& b) { return *this = *this + b; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint64_t n = lcm_u64(a.conductor_, b.conductor_);
  return a.lift(n).coeffs_ == b.lift(n).coeffs_;
}

CyclotomicNumber field_op(FieldOp kind, const CyclotomicNumber& x, const std::optional<CyclotomicNumber>& y) {
  switch (kind) {
    case FieldOp::neg:
      return -x;
    case FieldOp::inv:
      return x.inverse();
    case FieldOp::add:
    case FieldOp::mul:
      if (!y) throw DomainError("binary field operation needs two operands");
      return kind == FieldOp::add ? x + *y : x * *y;
  }
  throw DomainError("unknown field operation");
}

}  // namespace orbitlab
