#include "perron/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace perron {

BigFloat::BigFloat(Bits prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.prec());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

double BigFloat::to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  char* buf = nullptr;
  int len = 0;
  switch (rnd) {
    case MPFR_RNDD:
      len = mpfr_asprintf(&buf, "%.*RDg", digits, value_);
      break;
    case MPFR_RNDU:
      len = mpfr_asprintf(&buf, "%.*RUg", digits, value_);
      break;
    default:
      len = mpfr_asprintf(&buf, "%.*RNg", digits, value_);
      break;
  }
  if (len < 0 || buf == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

Bits join(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

BigFloat min_of(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) ? a : b; }
BigFloat max_of(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) ? b : a; }

}  // namespace

Interval::Interval(Bits prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long value, Bits prec) : lo_(prec), hi_(prec) {
  mpfr_set_si(lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

Interval::Interval(const mpz_class& value, Bits prec) : lo_(prec), hi_(prec) {
  mpfr_set_z(lo_.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_.get(), value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& value, Bits prec) : lo_(prec), hi_(prec) {
  mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const BigFloat& lo, const BigFloat& hi) : lo_(lo), hi_(hi) {
  if (mpfr_greater_p(lo.get(), hi.get())) throw std::invalid_argument("interval with lo > hi");
  if (hi_.prec() != lo_.prec()) {
    BigFloat h(lo_.prec());
    mpfr_set(h.get(), hi.get(), MPFR_RNDU);
    hi_ = std::move(h);
  }
}

Interval Interval::point(const BigFloat& value) { return Interval(value, value); }

Interval Interval::ball(const BigFloat& center, const BigFloat& radius, Bits prec) {
  BigFloat lo(prec);
  BigFloat hi(prec);
  mpfr_sub(lo.get(), center.get(), radius.get(), MPFR_RNDD);
  mpfr_add(hi.get(), center.get(), radius.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

bool Interval::contains(const mpz_class& value) const {
  return mpfr_cmp_z(lo_.get(), value.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_.get(), value.get_mpz_t()) >= 0;
}

int Interval::certain_sign() const {
  if (is_positive()) return 1;
  if (is_negative()) return -1;
  return 0;
}

BigFloat Interval::width() const {
  BigFloat w(prec());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat Interval::mid() const {
  BigFloat m(prec() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

double Interval::mid_double() const { return mid().to_double(); }

BigFloat Interval::mag() const {
  BigFloat a(prec());
  BigFloat b(prec());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDU);
  return max_of(a, b);
}

BigFloat Interval::mig() const {
  BigFloat out(prec());
  if (contains_zero()) return out;
  if (is_positive()) {
    mpfr_set(out.get(), lo_.get(), MPFR_RNDD);
  } else {
    mpfr_neg(out.get(), hi_.get(), MPFR_RNDD);
  }
  return out;
}

mpz_class Interval::floor_lo() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), lo_.get(), MPFR_RNDD);
  return z;
}

mpz_class Interval::floor_hi() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), hi_.get(), MPFR_RNDD);
  return z;
}

Interval Interval::operator-() const {
  BigFloat lo(prec());
  BigFloat hi(prec());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval operator+(const Interval& a, const Interval& b) {
  const Bits p = join(a, b);
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  const Bits p = join(a, b);
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval operator*(const Interval& a, const Interval& b) {
  const Bits p = join(a, b);
  const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
  BigFloat lo(p);
  BigFloat hi(p);
  BigFloat t(p);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  const Bits p = join(a, b);
  BigFloat lo(p);
  BigFloat hi(p);
  mpfr_ui_div(lo.get(), 1, b.hi_.get(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, b.lo_.get(), MPFR_RNDU);
  return a * Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) { return Interval(min_of(a.lo_, b.lo_), max_of(a.hi_, b.hi_)); }

Interval sqr(const Interval& a) {
  const Bits p = a.prec();
  BigFloat lo(p);
  BigFloat hi(p);
  if (a.is_positive() || mpfr_zero_p(a.lo().get())) {
    mpfr_sqr(lo.get(), a.lo().get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), a.hi().get(), MPFR_RNDU);
  } else if (a.is_negative() || mpfr_zero_p(a.hi().get())) {
    mpfr_sqr(lo.get(), a.hi().get(), MPFR_RNDD);
    mpfr_sqr(hi.get(), a.lo().get(), MPFR_RNDU);
  } else {
    mpfr_sqr(hi.get(), a.mag().get(), MPFR_RNDU);
  }
  return Interval(lo, hi);
}

Interval sqrt(const Interval& a) {
  if (a.is_negative()) throw std::domain_error("sqrt of a negative interval");
  const Bits p = a.prec();
  BigFloat lo(p);
  BigFloat hi(p);
  if (mpfr_sgn(a.lo().get()) > 0) mpfr_sqrt(lo.get(), a.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.hi().get(), MPFR_RNDU);
  return Interval(lo, hi);
}

Interval abs(const Interval& a) {
  if (a.is_positive() || mpfr_zero_p(a.lo().get())) return a;
  if (a.is_negative() || mpfr_zero_p(a.hi().get())) return -a;
  return Interval(BigFloat(a.prec()), a.mag());
}

Interval pow(const Interval& a, unsigned long exponent) {
  const Bits p = a.prec();
  if (exponent == 0) return Interval(1L, p);
  BigFloat lo(p);
  BigFloat hi(p);
  const bool odd = (exponent % 2) == 1;
  if (mpfr_sgn(a.lo().get()) >= 0 || odd) {
    // monotone increasing on the whole interval
    mpfr_pow_ui(lo.get(), a.lo().get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), a.hi().get(), exponent, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi().get()) <= 0) {
    mpfr_pow_ui(lo.get(), a.hi().get(), exponent, MPFR_RNDD);
    mpfr_pow_ui(hi.get(), a.lo().get(), exponent, MPFR_RNDU);
  } else {
    mpfr_pow_ui(hi.get(), a.mag().get(), exponent, MPFR_RNDU);
  }
  return Interval(lo, hi);
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(min_of(a.lo(), b.lo()), min_of(a.hi(), b.hi()));
}

ComplexInterval::ComplexInterval(Interval re) : re_(std::move(re)), im_(0L, re_.prec()) {}

Interval ComplexInterval::modulus() const {
  if (im_.is_point() && mpfr_zero_p(im_.lo().get())) return abs(re_);
  return sqrt(sqr(re_) + sqr(im_));
}

BigFloat ComplexInterval::radius() const {
  BigFloat r = max_of(re_.width(), im_.width());
  mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDU);
  return r;
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexInterval operator*(const Interval& a, const ComplexInterval& b) { return {a * b.re_, a * b.im_}; }

ComplexInterval operator/(const ComplexInterval& a, const Interval& b) { return {a.re_ / b, a.im_ / b}; }

}  // namespace perron
