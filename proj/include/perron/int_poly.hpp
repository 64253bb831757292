#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace perron {

/// Polynomial with integer coefficients, coeffs[i] is the coefficient of x^i.
/// The highest stored coefficient is nonzero.
class IntPolynomial {
 public:
  /// Trailing zeros are trimmed; throws ValidationError for the zero polynomial.
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const mpz_class& leading() const { return coeffs_.back(); }
  bool is_monic() const { return leading() == 1; }

  mpz_class eval(const mpz_class& x) const;
  /// Maximum absolute coefficient.
  mpz_class height() const;
  /// p(-x).
  IntPolynomial reflect() const;
  IntPolynomial derivative() const;

  /// "x^2 - x - 1" style rendering.
  std::string to_string() const;
  /// "[-1,-1,1]" style rendering, low to high.
  std::string to_list_string() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

/// Parses either a bracketed coefficient list, low degree first ("[-1,-1,1]"),
/// or a symbolic polynomial in x ("x^2 - x - 1"). Whitespace is ignored.
/// Throws ParseError on malformed text and ValidationError for the zero polynomial.
IntPolynomial parse_polynomial(std::string_view text);

/// Degree of gcd(p, q) over Q.
std::size_t gcd_degree(const IntPolynomial& p, const IntPolynomial& q);

inline bool is_squarefree(const IntPolynomial& p) { return p.degree() == 0 || gcd_degree(p, p.derivative()) == 0; }

}  // namespace perron
