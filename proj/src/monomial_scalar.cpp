#include "orbitlab/monomial_scalar.hpp"

#include <tuple>

#include "orbitlab/errors.hpp"

namespace orbitlab {

MonomialScalar::MonomialScalar() : q_(1) {}

MonomialScalar::MonomialScalar(const Rational& q) : MonomialScalar(q, 1, 0) {}

MonomialScalar::MonomialScalar(const Rational& q, std::uint64_t conductor, std::int64_t exponent)
    : q_(q), conductor_(conductor) {
  q_.canonicalize();
  if (conductor == 0) throw DomainError("conductor must be positive");
  if (q_ == 0) throw DomainError("monomial scalar must be nonzero");
  std::int64_t e = floor_mod(exponent, static_cast<std::int64_t>(conductor_));
  if (q_ < 0) {
    q_ = -q_;
    if (conductor_ % 2 == 1) {
      e *= 2;
      conductor_ *= 2;
    }
    e = floor_mod(e + static_cast<std::int64_t>(conductor_ / 2), static_cast<std::int64_t>(conductor_));
  }
  normalize(e);
}

void MonomialScalar::normalize(std::int64_t exponent) {
  auto e = static_cast<std::uint64_t>(floor_mod(exponent, static_cast<std::int64_t>(conductor_)));
  if (e == 0) {
    conductor_ = 1;
    exponent_ = 0;
    return;
  }
  const std::uint64_t g = gcd_u64(e, conductor_);
  conductor_ /= g;
  exponent_ = e / g;
}

std::uint64_t MonomialScalar::field_conductor() const noexcept {
  // zeta_N with N = 2 (mod 4) already lies in Q(zeta_{N/2}).
  return conductor_ % 4 == 2 ? conductor_ / 2 : conductor_;
}

MonomialScalar MonomialScalar::inverse() const {
  return MonomialScalar(1 / q_, conductor_, -static_cast<std::int64_t>(exponent_));
}

MonomialScalar MonomialScalar::pow(long e) const {
  MonomialScalar out;
  out.q_ = orbitlab::pow(q_, e);
  out.conductor_ = conductor_;
  out.normalize(static_cast<std::int64_t>(zeta_exponent_of_power(BigInt(e))));
  return out;
}

std::uint64_t MonomialScalar::zeta_exponent_of_power(const BigInt& e) const {
  if (conductor_ == 1) return 0;
  const unsigned __int128 prod =
      static_cast<unsigned __int128>(exponent_) * mod_u64(e, conductor_);
  return static_cast<std::uint64_t>(prod % conductor_);
}

CyclotomicNumber MonomialScalar::to_cyclotomic() const {
  return CyclotomicNumber::zeta(conductor_, static_cast<std::int64_t>(exponent_)).scaled(q_);
}

MonomialScalar operator*(const MonomialScalar& x, const MonomialScalar& y) {
  MonomialScalar out;
  out.q_ = x.q_ * y.q_;
  out.conductor_ = lcm_u64(x.conductor_, y.conductor_);
  const std::uint64_t ex = x.exponent_ * (out.conductor_ / x.conductor_);
  const std::uint64_t ey = y.exponent_ * (out.conductor_ / y.conductor_);
  out.normalize(static_cast<std::int64_t>((ex + ey) % out.conductor_));
  return out;
}

MonomialScalar operator/(const MonomialScalar& x, const MonomialScalar& y) { return x * y.inverse(); }

bool operator<(const MonomialScalar& x, const MonomialScalar& y) {
  if (x.q_ != y.q_) return x.q_ < y.q_;
  return std::tie(x.conductor_, x.exponent_) < std::tie(y.conductor_, y.exponent_);
}

std::optional<std::uint64_t> ratio_order(const MonomialScalar& u, const MonomialScalar& v) {
  const MonomialScalar r = u / v;
  if (!r.is_root_of_unity()) return std::nullopt;
  return r.conductor();
}

std::uint64_t group_order_D(const std::vector<MonomialScalar>& values) {
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (auto o = ratio_order(values[i], values[j])) d = lcm_u64(d, *o);
  return d;
}

}  // namespace orbitlab
