#include "perron/beta_expansion.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "perron/algebraic_int.hpp"
#include "perron/errors.hpp"

namespace perron {

QThetaNumber::QThetaNumber(std::vector<mpq_class> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ValidationError("empty coordinate vector");
}

QThetaNumber QThetaNumber::integer(std::size_t d, const mpz_class& value) {
  std::vector<mpq_class> c(d, 0);
  c[0] = value;
  return QThetaNumber(std::move(c));
}

bool QThetaNumber::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& q) { return q == 0; });
}

QThetaNumber parse_qtheta(std::string_view text, std::size_t d) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
      s += '-';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s += text[i];
    }
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unbalanced '[' in rational vector");
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty()) throw ParseError("empty rational vector");
  std::vector<mpq_class> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty() && item.front() == '+') item.erase(0, 1);
    if (item.empty() || item.find_first_not_of("0123456789-/") != std::string::npos) {
      throw ParseError("bad rational '" + item + "'");
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), item.c_str(), 10) != 0) throw ParseError("bad rational '" + item + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + item + "'");
    q.canonicalize();
    coords.push_back(q);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coords.size() > d) {
    throw ValidationError("rational vector has " + std::to_string(coords.size()) + " entries, degree is " +
                          std::to_string(d));
  }
  coords.resize(d, 0);
  return QThetaNumber(std::move(coords));
}

QThetaNumber mul_by_theta(const MinPoly& mp, const QThetaNumber& x) {
  const std::size_t d = mp.degree();
  if (x.dim() != d) throw ValidationError("dimension mismatch");
  const IntPolynomial& p = mp.poly();
  const mpq_class top = x.coords()[d - 1];
  std::vector<mpq_class> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = (i == 0 ? mpq_class(0) : x.coords()[i - 1]) - top * p[i];
  return QThetaNumber(std::move(out));
}

QThetaNumber sub_integer(const QThetaNumber& x, const mpz_class& k) {
  std::vector<mpq_class> c = x.coords();
  c[0] -= k;
  return QThetaNumber(std::move(c));
}

int sign_of(const MinPoly& mp, const QThetaNumber& x) {
  // A positive common denominator does not change the sign.
  mpz_class den = 1;
  for (const auto& q : x.coords()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> num;
  num.reserve(x.dim());
  for (const auto& q : x.coords()) num.push_back(q.get_num() * (den / q.get_den()));
  return sign_of(mp, AlgebraicInt(std::move(num)));
}

std::string DigitWord::to_string(long m) const {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (m > 9 && i > 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

namespace {

// floor(y) for 0 <= y < m + 1, by bisection on exact signs.
long certified_floor(const MinPoly& mp, const QThetaNumber& y) {
  long lo = 0, hi = mp.floor_theta();  // floor(y) in [lo, hi]
  while (lo < hi) {
    const long mid = lo + (hi - lo + 1) / 2;
    if (sign_of(mp, sub_integer(y, mid)) >= 0) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

// Digits of the greedy orbit starting at x; stops early at an exact zero.
DigitWord greedy_orbit(const MinPoly& mp, QThetaNumber x, std::size_t n, bool& terminated) {
  DigitWord w;
  terminated = false;
  for (std::size_t k = 0; k < n; ++k) {
    const QThetaNumber y = mul_by_theta(mp, x);
    const long digit = certified_floor(mp, y);
    w.digits.push_back(digit);
    x = sub_integer(y, digit);
    if (x.is_zero()) {
      terminated = true;
      break;
    }
  }
  return w;
}

}  // namespace

DigitWord greedy_digits(const MinPoly& mp, const QThetaNumber& x, std::size_t n) {
  if (x.dim() != mp.degree()) throw ValidationError("dimension mismatch");
  if (sign_of(mp, x) < 0 || sign_of(mp, sub_integer(x, 1)) >= 0) throw ValidationError("x must lie in [0, 1)");
  bool terminated = false;
  DigitWord w = greedy_orbit(mp, x, n, terminated);
  w.digits.resize(n, 0);
  return w;
}

DigitWord quasi_greedy_one(const MinPoly& mp, std::size_t n) {
  if (n < 1) throw ValidationError("n must be >= 1");
  // Same map as greedy_digits, started at 1 instead of a point of [0, 1).
  bool terminated = false;
  const DigitWord greedy = greedy_orbit(mp, QThetaNumber::integer(mp.degree(), 1), n, terminated);
  if (!terminated) return greedy;
  std::vector<long> period = greedy.digits;
  period.back() -= 1;
  DigitWord w;
  for (std::size_t k = 0; k < n; ++k) w.digits.push_back(period[k % period.size()]);
  return w;
}

mpz_class count_admissible(const MinPoly& mp, std::size_t n) {
  if (n < 1) throw ValidationError("n must be >= 1");
  const long m = mp.floor_theta();
  const std::vector<long> e = quasi_greedy_one(mp, n).digits;
  // ways[q]: words whose longest suffix equal to a prefix e_1..e_q of e is q.
  std::vector<mpz_class> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<mpz_class> next(n + 1, 0);
    for (std::size_t q = 0; q < n; ++q) {
      if (ways[q] == 0) continue;
      const long bound = e[q];
      // symbols below e_{q+1} release every pending constraint
      next[0] += ways[q] * std::min(bound, m + 1);
      if (bound <= m) next[q + 1] += ways[q];
    }
    ways = std::move(next);
  }
  return std::accumulate(ways.begin(), ways.end(), mpz_class(0));
}

std::vector<LowerBoundRow> lower_bound_check(const MinPoly& mp, std::span<const std::uint64_t> counts) {
  if (counts.empty()) throw ValidationError("no counts supplied");
  const Bits prec = mp.precision();
  const Interval theta = mp.theta(prec);
  std::vector<LowerBoundRow> rows;
  Interval power(1L, prec);
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    power = power * theta;
    const mpz_class a = count_admissible(mp, n);
    const mpz_class c(static_cast<unsigned long>(counts[n - 1]));
    rows.push_back({n, a, counts[n - 1], a <= c, Interval(a, prec) / power});
  }
  return rows;
}

}  // namespace perron
