#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "perron/interval.hpp"
#include "perron/min_poly.hpp"

namespace perron {

/// Element of Z[theta] in the power basis 1, theta, ..., theta^(d-1).
class AlgebraicInt {
 public:
  explicit AlgebraicInt(std::vector<mpz_class> coords);

  static AlgebraicInt zero(std::size_t d) { return AlgebraicInt(std::vector<mpz_class>(d, 0)); }
  static AlgebraicInt integer(std::size_t d, const mpz_class& value);

  const std::vector<mpz_class>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  bool is_zero() const;

  friend bool operator==(const AlgebraicInt&, const AlgebraicInt&) = default;
  friend auto operator<=>(const AlgebraicInt& a, const AlgebraicInt& b) {
    // lexicographic on coordinates
    for (std::size_t i = 0; i < a.coords_.size() && i < b.coords_.size(); ++i) {
      const int c = cmp(a.coords_[i], b.coords_[i]);
      if (c != 0) return c <=> 0;
    }
    return a.coords_.size() <=> b.coords_.size();
  }

 private:
  std::vector<mpz_class> coords_;
};

/// Coordinate-wise sum. Throws ValidationError when the dimensions differ.
AlgebraicInt add(const AlgebraicInt& a, const AlgebraicInt& b);
AlgebraicInt sub(const AlgebraicInt& a, const AlgebraicInt& b);
AlgebraicInt scale(const AlgebraicInt& a, const mpz_class& k);

/// theta * a via the companion matrix: shift up one degree and reduce theta^d
/// through theta^d = -sum_{i<d} p_i theta^i.
AlgebraicInt mul_by_theta(const MinPoly& mp, const AlgebraicInt& a);
AlgebraicInt theta_power(const MinPoly& mp, unsigned long k);

/// Horner evaluation sum c_k theta^k for k = 1..n, as an element of Z[theta].
AlgebraicInt digit_value(const MinPoly& mp, std::span<const long> digits);

/// Enclosure of sum coords[i] * z^i for z in the given box.
ComplexInterval evaluate(std::span<const mpz_class> coords, const ComplexInterval& z);
Interval evaluate(std::span<const mpz_class> coords, const Interval& x);

/// Certified sign of the real number represented by a. Zero exactly when the
/// coordinate vector is zero; otherwise the enclosure at theta is refined
/// until it excludes zero, which terminates because |N(a)| >= 1.
int sign_of(const MinPoly& mp, const AlgebraicInt& a);

/// Enclosure of a under the j-th embedding (1-based, j = 1 is theta) whose
/// radius is at most 2^-precision.
ComplexInterval embed(const MinPoly& mp, const AlgebraicInt& a, std::size_t j, Bits precision);

/// Real enclosure of a at theta with radius at most 2^-precision.
Interval real_value(const MinPoly& mp, const AlgebraicInt& a, Bits precision);

}  // namespace perron
