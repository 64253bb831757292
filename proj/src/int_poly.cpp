#include "perron/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "perron/errors.hpp"

namespace perron {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw ValidationError("zero polynomial");
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class IntPolynomial::height() const {
  mpz_class h = 0;
  for (const auto& c : coeffs_) h = std::max<mpz_class>(h, abs(c));
  return h;
}

IntPolynomial IntPolynomial::reflect() const {
  std::vector<mpz_class> out = coeffs_;
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() == 0) throw ValidationError("derivative of a constant");
  std::vector<mpz_class> out;
  out.reserve(degree());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::string IntPolynomial::to_list_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out + "]";
}

namespace {

// Strips whitespace and folds the Unicode minus sign (U+2212) into '-'.
std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else if (!std::isspace(ch)) {
      out += static_cast<char>(ch);
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string s) : s_(std::move(s)) {}
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  mpz_class digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }
  mpz_class signed_integer() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    mpz_class v = digits();
    return neg ? mpz_class(-v) : v;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial syntax error at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string s_;
  std::size_t pos_ = 0;
};

IntPolynomial parse_list(Cursor& cur) {
  cur.expect('[');
  std::vector<mpz_class> coeffs;
  if (cur.peek() == ']') cur.fail("empty coefficient list");
  do {
    coeffs.push_back(cur.signed_integer());
  } while (cur.accept(','));
  cur.expect(']');
  if (!cur.done()) cur.fail("trailing characters after ']'");
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial parse_symbolic(Cursor& cur) {
  std::map<unsigned long, mpz_class> terms;
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.accept('-')) {
      neg = true;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (cur.at_digit()) {
      coeff = cur.digits();
      have_coeff = true;
      cur.accept('*');
    }
    unsigned long power = 0;
    if (cur.accept('x') || cur.accept('X')) {
      power = 1;
      if (cur.accept('^')) {
        const mpz_class e = cur.digits();
        if (!e.fits_ulong_p() || e > 100000) cur.fail("exponent too large");
        power = e.get_ui();
      }
    } else if (!have_coeff) {
      cur.fail("expected a coefficient or 'x'");
    }
    terms[power] += neg ? mpz_class(-coeff) : coeff;
  }
  if (terms.empty()) cur.fail("empty polynomial");
  std::vector<mpz_class> coeffs(terms.rbegin()->first + 1, 0);
  for (const auto& [power, c] : terms) coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

using RatPoly = std::vector<mpq_class>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a by b over Q; b nonzero.
RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  Cursor cur(normalize(text));
  if (cur.done()) cur.fail("empty input");
  if (cur.peek() == '[') return parse_list(cur);
  return parse_symbolic(cur);
}

std::size_t gcd_degree(const IntPolynomial& p, const IntPolynomial& q) {
  RatPoly a(p.coeffs().begin(), p.coeffs().end());
  RatPoly b(q.coeffs().begin(), q.coeffs().end());
  while (!b.empty()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

}  // namespace perron
