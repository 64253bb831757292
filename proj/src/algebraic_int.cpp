#include "perron/algebraic_int.hpp"

#include <algorithm>

#include "perron/errors.hpp"

namespace perron {

AlgebraicInt::AlgebraicInt(std::vector<mpz_class> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ValidationError("algebraic integer needs at least one coordinate");
}

AlgebraicInt AlgebraicInt::integer(std::size_t d, const mpz_class& value) {
  std::vector<mpz_class> c(d, 0);
  c[0] = value;
  return AlgebraicInt(std::move(c));
}

bool AlgebraicInt::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpz_class& c) { return c == 0; });
}

namespace {

void require_same_dim(const AlgebraicInt& a, const AlgebraicInt& b) {
  if (a.dim() != b.dim()) throw ValidationError("mismatched degree in Z[theta] arithmetic");
}

void require_dim(const MinPoly& mp, const AlgebraicInt& a) {
  if (a.dim() != mp.degree()) throw ValidationError("element dimension does not match the polynomial degree");
}

}  // namespace

AlgebraicInt add(const AlgebraicInt& a, const AlgebraicInt& b) {
  require_same_dim(a, b);
  std::vector<mpz_class> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords()[i] + b.coords()[i];
  return AlgebraicInt(std::move(out));
}

AlgebraicInt sub(const AlgebraicInt& a, const AlgebraicInt& b) {
  require_same_dim(a, b);
  std::vector<mpz_class> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords()[i] - b.coords()[i];
  return AlgebraicInt(std::move(out));
}

AlgebraicInt scale(const AlgebraicInt& a, const mpz_class& k) {
  std::vector<mpz_class> out(a.coords());
  for (auto& c : out) c *= k;
  return AlgebraicInt(std::move(out));
}

AlgebraicInt mul_by_theta(const MinPoly& mp, const AlgebraicInt& a) {
  require_dim(mp, a);
  const std::size_t d = a.dim();
  const auto& p = mp.poly();
  const mpz_class top = a.coords()[d - 1];
  std::vector<mpz_class> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    out[i] = (i == 0 ? mpz_class(0) : a.coords()[i - 1]) - top * p[i];
  }
  return AlgebraicInt(std::move(out));
}

AlgebraicInt theta_power(const MinPoly& mp, unsigned long k) {
  AlgebraicInt v = AlgebraicInt::integer(mp.degree(), 1);
  for (unsigned long i = 0; i < k; ++i) v = mul_by_theta(mp, v);
  return v;
}

AlgebraicInt digit_value(const MinPoly& mp, std::span<const long> digits) {
  // sum_{k=1}^n c_k theta^k = theta * (c_1 + theta * (c_2 + ... + theta * c_n))
  AlgebraicInt acc = AlgebraicInt::zero(mp.degree());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc = mul_by_theta(mp, add(acc, AlgebraicInt::integer(mp.degree(), *it)));
  }
  return acc;
}

ComplexInterval evaluate(std::span<const mpz_class> coords, const ComplexInterval& z) {
  const Bits prec = z.prec();
  ComplexInterval acc(Interval(coords.back(), prec));
  for (std::size_t i = coords.size() - 1; i-- > 0;) acc = acc * z + ComplexInterval(Interval(coords[i], prec));
  return acc;
}

Interval evaluate(std::span<const mpz_class> coords, const Interval& x) {
  const Bits prec = x.prec();
  Interval acc(coords.back(), prec);
  for (std::size_t i = coords.size() - 1; i-- > 0;) acc = acc * x + Interval(coords[i], prec);
  return acc;
}

int sign_of(const MinPoly& mp, const AlgebraicInt& a) {
  require_dim(mp, a);
  if (a.is_zero()) return 0;
  for (Bits bits = mp.precision();; bits *= 2) {
    const int s = evaluate(a.coords(), mp.theta(bits)).certain_sign();
    if (s != 0) return s;
  }
}

namespace {

bool radius_ok(const BigFloat& radius, Bits precision) {
  BigFloat bound(64);
  mpfr_set_ui_2exp(bound.get(), 1, -static_cast<mpfr_exp_t>(precision), MPFR_RNDN);
  return mpfr_lessequal_p(radius.get(), bound.get()) != 0;
}

}  // namespace

ComplexInterval embed(const MinPoly& mp, const AlgebraicInt& a, std::size_t j, Bits precision) {
  require_dim(mp, a);
  if (j < 1 || j > mp.degree()) throw ValidationError("conjugate index out of range");
  for (Bits bits = std::max(mp.precision(), precision + 64);; bits *= 2) {
    ComplexInterval val = evaluate(a.coords(), mp.conjugates_at(bits)->enclosure(j));
    if (radius_ok(val.radius(), precision)) return val;
  }
}

Interval real_value(const MinPoly& mp, const AlgebraicInt& a, Bits precision) {
  require_dim(mp, a);
  for (Bits bits = std::max(mp.precision(), precision + 64);; bits *= 2) {
    Interval val = evaluate(a.coords(), mp.theta(bits));
    BigFloat half = val.width();
    mpfr_div_2ui(half.get(), half.get(), 1, MPFR_RNDU);
    if (radius_ok(half, precision)) return val;
  }
}

}  // namespace perron
