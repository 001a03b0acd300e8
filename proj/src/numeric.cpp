#include "orbitlab/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "orbitlab/errors.hpp"

namespace orbitlab {

MpfrValue::MpfrValue(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

MpfrValue::MpfrValue(const MpfrValue& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

MpfrValue::MpfrValue(MpfrValue&& other) noexcept : MpfrValue(static_cast<const MpfrValue&>(other)) {}

MpfrValue& MpfrValue::operator=(const MpfrValue& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

MpfrValue& MpfrValue::operator=(MpfrValue&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

MpfrValue::~MpfrValue() { mpfr_clear(value_); }

std::string MpfrValue::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval Interval::exact(const Rational& q, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::exact(const BigInt& z, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_z(out.lo_.get(), z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_.get(), z.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval Interval::exact(long z, mpfr_prec_t prec) { return exact(BigInt(z), prec); }

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_const_pi(out.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(out.hi_.get(), MPFR_RNDU);
  return out;
}

Interval Interval::from_bounds(MpfrValue lo, MpfrValue hi) {
  Interval out(lo.precision());
  out.lo_ = std::move(lo);
  out.hi_ = std::move(hi);
  return out;
}

double Interval::mid_double() const {
  MpfrValue m(precision() + 2);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

double Interval::width_double() const {
  MpfrValue w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

Interval Interval::operator-() const {
  Interval out(precision());
  mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision(), b.precision()));
  mpfr_add(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval out(prec);
  MpfrValue t(prec);
  const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : as)
    for (auto y : bs) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), out.lo_.get())) mpfr_set(out.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), out.hi_.get())) mpfr_set(out.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval recip(prec);
  mpfr_ui_div(recip.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(recip.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * recip;
}

Interval Interval::square() const {
  Interval out = *this * *this;
  if (contains_zero()) mpfr_set_zero(out.lo_.get(), 1);
  return out;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_.get()) <= 0) throw DomainError("logarithm of an interval not bounded away from zero");
  Interval out(precision());
  mpfr_log(out.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(out.hi_.get(), hi_.get(), MPFR_RNDU);
  return out;
}

Interval Interval::exp() const {
  Interval out(precision());
  mpfr_exp(out.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(out.hi_.get(), hi_.get(), MPFR_RNDU);
  return out;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_.get()) < 0) throw DomainError("square root of a negative interval");
  Interval out(precision());
  mpfr_sqrt(out.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(out.hi_.get(), hi_.get(), MPFR_RNDU);
  return out;
}

namespace {

// |f(x) - f(lo)| <= (hi - lo) for f = cos, sin.
Interval lipschitz_enclosure(const Interval& x, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  const mpfr_prec_t prec = x.precision();
  MpfrValue width(prec), at(prec), lo(prec), hi(prec);
  mpfr_sub(width.get(), x.hi().get(), x.lo().get(), MPFR_RNDU);
  fn(at.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sub(lo.get(), at.get(), width.get(), MPFR_RNDD);
  fn(at.get(), x.lo().get(), MPFR_RNDU);
  mpfr_add(hi.get(), at.get(), width.get(), MPFR_RNDU);
  return Interval::from_bounds(std::move(lo), std::move(hi));
}

}  // namespace

Interval Interval::cos() const { return lipschitz_enclosure(*this, mpfr_cos); }

Interval Interval::sin() const { return lipschitz_enclosure(*this, mpfr_sin); }

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_.get(), other.lo_.get()) != 0; }

bool Interval::certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

double ComplexEnclosure::error_bound() const {
  // Half-widths plus the rounding of the midpoints to double.
  const double slack_re = re.width_double() / 2 + std::abs(re.mid_double()) * 0x1p-52;
  const double slack_im = im.width_double() / 2 + std::abs(im.mid_double()) * 0x1p-52;
  return std::nextafter(slack_re + slack_im, INFINITY);
}

Interval ComplexEnclosure::modulus() const { return (re.square() + im.square()).sqrt(); }

ComplexEnclosure embed_numeric(const CyclotomicNumber& x, mpfr_prec_t precision) {
  if (precision < 53) throw DomainError("embedding precision must be at least 53 bits");
  const mpfr_prec_t prec = precision + 16;
  ComplexEnclosure out{Interval::exact(0L, prec), Interval::exact(0L, prec)};
  const auto n = static_cast<long>(x.conductor());
  const Interval two_pi_over_n = Interval::pi(prec) * Interval::exact(Rational(2, n), prec);
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const Rational& c = x.coeffs()[k];
    if (c == 0) continue;
    const Interval coeff = Interval::exact(c, prec);
    if (k == 0) {
      out.re = out.re + coeff;
      continue;
    }
    const Interval angle = two_pi_over_n * Interval::exact(static_cast<long>(k), prec);
    out.re = out.re + coeff * angle.cos();
    out.im = out.im + coeff * angle.sin();
  }
  return out;
}

}  // namespace orbitlab
