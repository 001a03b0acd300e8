#include "orbitlab/exact_decision.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "orbitlab/errors.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab {

namespace {

constexpr mpfr_prec_t kPrec = 192;

using PrimeMap = std::map<BigInt, BigInt>;

struct RationalTerm {
  const PrimeMap* q;
  Rational c;
};

BigInt remove_factor(BigInt x, const BigInt& p, BigInt& count) {
  count = 0;
  if (x == 0) return x;
  BigInt out;
  count = mpz_remove(out.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return out;
}

BigInt valuation(const Rational& c, const BigInt& p) {
  BigInt vn, vd;
  remove_factor(c.get_num(), p, vn);
  remove_factor(c.get_den(), p, vd);
  return vn - vd;
}

bool padic_certificate(const std::vector<RationalTerm>& terms) {
  std::set<BigInt> primes;
  for (const auto& t : terms)
    for (const auto& [p, e] : *t.q) primes.insert(p);
  for (const auto& p : primes) {
    std::vector<BigInt> v;
    for (const auto& t : terms) {
      const auto it = t.q->find(p);
      v.push_back((it == t.q->end() ? BigInt(0) : it->second) + valuation(t.c, p));
    }
    const BigInt least = *std::min_element(v.begin(), v.end());
    if (std::count(v.begin(), v.end(), least) == 1) return true;
  }
  return false;
}

Interval log_abs(const RationalTerm& t) {
  Interval out = Interval::exact(Rational(abs(t.c)), kPrec).log();
  for (const auto& [p, e] : *t.q) out = out + Interval::exact(e, kPrec) * Interval::exact(p, kPrec).log();
  return out;
}

bool archimedean_certificate(const std::vector<RationalTerm>& terms) {
  std::vector<Interval> logs;
  for (const auto& t : terms) logs.push_back(log_abs(t));
  std::size_t top = 0;
  for (std::size_t i = 1; i < logs.size(); ++i)
    if (logs[i].hi_double() > logs[top].hi_double()) top = i;
  // The largest term beats the sum of the others: |x_top| > (K - 1) max |x_i|.
  const Interval slack = Interval::exact(static_cast<long>(logs.size() - 1), kPrec).log();
  for (std::size_t i = 0; i < logs.size(); ++i) {
    if (i == top) continue;
    if (!(logs[i] + slack).certainly_less(logs[top])) return false;
  }
  return true;
}

double prime_bits(const PrimeMap& q) {
  double bits = 0;
  for (const auto& [p, e] : q) bits += std::fabs(e.get_d()) * std::log2(p.get_d());
  return bits;
}

Rational prime_value(const PrimeMap& q) {
  Rational out = 1;
  for (const auto& [p, e] : q) {
    if (!e.fits_slong_p()) throw ResourceError("exponent too large to materialise");
    out *= pow(Rational(p), e.get_si());
  }
  return out;
}

ZeroVerdict direct_sum(const std::vector<RationalTerm>& terms) {
  Rational sum = 0;
  for (const auto& t : terms) sum += prime_value(*t.q) * t.c;
  return sum == 0 ? ZeroVerdict::zero : ZeroVerdict::nonzero;
}

ZeroVerdict decide_rational_sum(const std::vector<RationalTerm>& terms, const DecisionConfig& cfg) {
  if (terms.empty()) return ZeroVerdict::zero;
  if (terms.size() == 1) return ZeroVerdict::nonzero;
  double largest = 0;
  for (const auto& t : terms) largest = std::max(largest, prime_bits(*t.q));
  if (largest <= std::min(4096.0, cfg.cutoff_bits)) return direct_sum(terms);
  if (padic_certificate(terms) || archimedean_certificate(terms)) return ZeroVerdict::nonzero;
  if (largest > cfg.cutoff_bits) return ZeroVerdict::undecided;
  return direct_sum(terms);
}

}  // namespace

double factored_bits(const FactoredScalar& v) { return prime_bits(v.prime_exponents()); }

Rational materialise(const FactoredScalar& v) { return prime_value(v.prime_exponents()); }

ZeroVerdict decide_zero(const std::vector<FactoredTerm>& terms, const DecisionConfig& cfg) {
  // Merge terms whose rational parts agree; their root-of-unity parts and
  // coefficients combine into one cyclotomic coefficient.
  std::map<PrimeMap, CyclotomicNumber> merged;
  for (const auto& t : terms) {
    const CyclotomicNumber c = t.coeff.times_zeta(t.value.conductor(), static_cast<std::int64_t>(t.value.zeta_exponent()));
    auto [it, fresh] = merged.try_emplace(t.value.prime_exponents(), c);
    if (!fresh) it->second += c;
  }
  std::uint64_t conductor = 1;
  for (auto it = merged.begin(); it != merged.end();) {
    if (it->second.is_zero()) {
      it = merged.erase(it);
      continue;
    }
    conductor = lcm_u64(conductor, it->second.conductor());
    ++it;
  }
  if (merged.empty()) return ZeroVerdict::zero;
  if (merged.size() == 1) return ZeroVerdict::nonzero;

  std::vector<std::pair<const PrimeMap*, std::vector<Rational>>> lifted;
  for (const auto& [q, c] : merged) lifted.emplace_back(&q, c.lift(conductor).coeffs());
  const std::size_t width = euler_phi(conductor);
  bool undecided = false;
  for (std::size_t i = 0; i < width; ++i) {
    std::vector<RationalTerm> column;
    for (const auto& [q, coeffs] : lifted)
      if (coeffs[i] != 0) column.push_back({q, coeffs[i]});
    switch (decide_rational_sum(column, cfg)) {
      case ZeroVerdict::nonzero:
        return ZeroVerdict::nonzero;
      case ZeroVerdict::undecided:
        undecided = true;
        break;
      case ZeroVerdict::zero:
        break;
    }
  }
  return undecided ? ZeroVerdict::undecided : ZeroVerdict::zero;
}

}  // namespace orbitlab
