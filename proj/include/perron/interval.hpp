#pragma once

// Outward-rounded real and complex interval arithmetic on top of MPFR.
//
// Every operation returns an enclosure of the exact result: lower endpoints
// are rounded toward -inf, upper endpoints toward +inf. Intervals carry the
// precision they were created with; binary operations use the larger of the
// two operand precisions.

#include <mpfr.h>
#include <gmpxx.h>

#include <string>

namespace perron {

using Bits = mpfr_prec_t;

/// Owning wrapper around mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(Bits prec = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  Bits prec() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

  friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

/// Closed real interval [lo, hi].
class Interval {
 public:
  explicit Interval(Bits prec = 64);
  Interval(long value, Bits prec);
  Interval(const mpz_class& value, Bits prec);
  Interval(const mpq_class& value, Bits prec);
  /// Interval [lo, hi]; lo <= hi is required.
  Interval(const BigFloat& lo, const BigFloat& hi);

  static Interval point(const BigFloat& value);
  /// [center - radius, center + radius], outward rounded.
  static Interval ball(const BigFloat& center, const BigFloat& radius, Bits prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  Bits prec() const { return lo_.prec(); }

  bool contains_zero() const;
  bool contains(const mpz_class& value) const;
  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  /// +1 / -1 when the interval excludes zero, 0 when it does not.
  int certain_sign() const;
  bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }

  /// Upper bound on hi - lo.
  BigFloat width() const;
  BigFloat mid() const;
  /// Upper bound on max(|lo|, |hi|).
  BigFloat mag() const;
  /// Lower bound on min |x| over the interval (0 when it straddles zero).
  BigFloat mig() const;

  /// Largest integer n with n <= every point, i.e. floor(lo).
  mpz_class floor_lo() const;
  mpz_class floor_hi() const;

  double lo_double() const { return lo_.to_double(MPFR_RNDD); }
  double hi_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Requires b to exclude zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  /// Convex hull.
  friend Interval hull(const Interval& a, const Interval& b);
  friend bool certainly_less(const Interval& a, const Interval& b) {
    return mpfr_less_p(a.hi_.get(), b.lo_.get()) != 0;
  }

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval abs(const Interval& a);
Interval pow(const Interval& a, unsigned long exponent);
/// Enclosure of min(a, b) taken pointwise over both intervals.
Interval min(const Interval& a, const Interval& b);

/// Rectangular complex interval re + i*im.
class ComplexInterval {
 public:
  explicit ComplexInterval(Bits prec = 64) : re_(prec), im_(prec) {}
  ComplexInterval(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit ComplexInterval(Interval re);

  const Interval& re() const { return re_; }
  const Interval& im() const { return im_; }
  Bits prec() const { return re_.prec(); }

  /// Enclosure of the modulus.
  Interval modulus() const;
  /// Upper bound on the larger half-width of the two coordinate intervals.
  BigFloat radius() const;
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }

  ComplexInterval conj() const { return {re_, -im_}; }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const Interval& a, const ComplexInterval& b);
  /// Requires b to exclude zero.
  friend ComplexInterval operator/(const ComplexInterval& a, const Interval& b);

 private:
  Interval re_;
  Interval im_;
};

}  // namespace perron
