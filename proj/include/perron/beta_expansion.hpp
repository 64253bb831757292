#pragma once

// Greedy theta-expansions over Q(theta) and the lexicographic count of
// admissible digit words.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "perron/interval.hpp"
#include "perron/min_poly.hpp"

namespace perron {

/// Element of Q(theta) in the power basis 1, theta, ..., theta^(d-1).
class QThetaNumber {
 public:
  explicit QThetaNumber(std::vector<mpq_class> coords);
  static QThetaNumber integer(std::size_t d, const mpz_class& value);

  const std::vector<mpq_class>& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  bool is_zero() const;

 private:
  std::vector<mpq_class> coords_;
};

/// "[2,-1]", "2, -1" or "1/2" (shorter vectors are padded with zeros).
QThetaNumber parse_qtheta(std::string_view text, std::size_t d);

QThetaNumber mul_by_theta(const MinPoly& mp, const QThetaNumber& x);
QThetaNumber sub_integer(const QThetaNumber& x, const mpz_class& k);
/// Exact sign of the real value of x.
int sign_of(const MinPoly& mp, const QThetaNumber& x);

struct DigitWord {
  std::vector<long> digits;
  /// Digits run together when every digit is a single character, comma-separated otherwise.
  std::string to_string(long m) const;
};

/// First n digits of the greedy expansion of x in [0, 1): x_k = theta x_{k-1} - digit_k.
DigitWord greedy_digits(const MinPoly& mp, const QThetaNumber& x, std::size_t n);

/// First n digits of the quasi-greedy expansion of 1: the greedy expansion when
/// it does not terminate, otherwise (d_1 ... d_{t-1} (d_t - 1)) repeated.
DigitWord quasi_greedy_one(const MinPoly& mp, std::size_t n);

/// Number of length-n words over {0..m} whose every suffix is lexicographically
/// at most the prefix of the quasi-greedy expansion of 1 of the same length.
mpz_class count_admissible(const MinPoly& mp, std::size_t n);

struct LowerBoundRow {
  std::size_t n;
  mpz_class admissible;
  std::uint64_t count;
  bool holds;      // admissible <= count
  Interval ratio;  // admissible / theta^n
};

/// counts[k-1] = #D_k.
std::vector<LowerBoundRow> lower_bound_check(const MinPoly& mp, std::span<const std::uint64_t> counts);

}  // namespace perron
