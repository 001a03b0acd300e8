#pragma once

#include <mpfr.h>

#include <string>

#include "orbitlab/bigint.hpp"
#include "orbitlab/cyclotomic.hpp"

namespace orbitlab {

/// Owning wrapper around an mpfr_t.
class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec);
  MpfrValue(const MpfrValue& other);
  MpfrValue(MpfrValue&& other) noexcept;
  MpfrValue& operator=(const MpfrValue& other);
  MpfrValue& operator=(MpfrValue&& other) noexcept;
  ~MpfrValue();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  /// Decimal rendering with `digits` significant digits.
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
  bool live_ = true;
};

/// Closed interval [lo, hi] with endpoints rounded outward at every step.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 256);

  static Interval exact(const Rational& q, mpfr_prec_t prec = 256);
  static Interval exact(const BigInt& z, mpfr_prec_t prec = 256);
  static Interval exact(long z, mpfr_prec_t prec = 256);
  static Interval pi(mpfr_prec_t prec = 256);
  /// Takes ownership of already-rounded endpoints (lo <= hi).
  static Interval from_bounds(MpfrValue lo, MpfrValue hi);

  const MpfrValue& lo() const noexcept { return lo_; }
  const MpfrValue& hi() const noexcept { return hi_; }
  mpfr_prec_t precision() const noexcept { return lo_.precision(); }
  double lo_double() const { return lo_.to_double(MPFR_RNDD); }
  double hi_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const;
  double width_double() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval square() const;
  Interval log() const;   // requires lo > 0
  Interval exp() const;
  Interval sqrt() const;  // requires lo >= 0
  Interval cos() const;
  Interval sin() const;

  /// hi < other.lo
  bool certainly_less(const Interval& other) const;
  bool certainly_positive() const;
  bool contains_zero() const;

 private:
  MpfrValue lo_;
  MpfrValue hi_;
};

/// Enclosure of a complex embedding zeta_N -> exp(2 pi i / N).
struct ComplexEnclosure {
  Interval re;
  Interval im;
  double re_approx() const { return re.mid_double(); }
  double im_approx() const { return im.mid_double(); }
  /// Bound on |value - (re_approx + i im_approx)|.
  double error_bound() const;
  Interval modulus() const;
};

/// Numeric value of x with a rigorous error bound; precision >= 53 bits.
ComplexEnclosure embed_numeric(const CyclotomicNumber& x, mpfr_prec_t precision = 128);

}  // namespace orbitlab
