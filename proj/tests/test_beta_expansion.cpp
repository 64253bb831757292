#include <gtest/gtest.h>

#include "perron/beta_expansion.hpp"
#include "perron/digit_sets.hpp"
#include "perron/errors.hpp"

using namespace perron;

namespace {

MinPoly mp_of(const char* text) { return make_min_poly(parse_polynomial(text)); }

const char* kSuite[] = {"x^2 - x - 1", "x^2 - 2*x - 1", "x^2 - 5*x + 3", "x^3 - x - 1", "x - 2", "x - 3"};

// Words of length n over {0..m} with every suffix <= the same-length prefix of e.
long brute_admissible(long m, const std::vector<long>& e, std::size_t n) {
  std::vector<long> w(n, 0);
  long count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = !std::lexicographical_compare(e.begin(), e.begin() + (n - i), w.begin() + i, w.end());
    }
    count += ok;
    std::size_t k = 0;
    while (k < n && w[k] == m) w[k++] = 0;
    if (k == n) return count;
    ++w[k];
  }
}

}  // namespace

TEST(QTheta, ParseAndSign) {
  const MinPoly phi = mp_of("x^2 - x - 1");
  const QThetaNumber x = parse_qtheta("[2, \xE2\x88\x92" "1]", 2);
  EXPECT_EQ(x.coords()[0], 2);
  EXPECT_EQ(x.coords()[1], -1);
  EXPECT_EQ(sign_of(phi, x), 1);  // 2 - phi > 0
  EXPECT_EQ(parse_qtheta("1/2", 2).coords()[1], 0);
  EXPECT_EQ(parse_qtheta("3/6", 1).coords()[0], mpq_class(1, 2));
  EXPECT_EQ(sign_of(phi, parse_qtheta("-1/3, 1/5", 2)), -1);  // phi/5 - 1/3 < 0
  EXPECT_THROW(parse_qtheta("1/0", 2), ParseError);
  EXPECT_THROW(parse_qtheta("1,x", 2), ParseError);
  EXPECT_THROW(parse_qtheta("[1,2", 2), ParseError);
  EXPECT_THROW(parse_qtheta("", 2), ParseError);
  EXPECT_THROW(parse_qtheta("1,2,3", 2), ValidationError);
}

TEST(Greedy, Examples) {
  const MinPoly phi = mp_of("x^2 - x - 1");
  // 1/theta^2 = 2 - theta: theta * x = 2 theta - theta^2 = theta - 1 < 1, then 1
  const auto w = greedy_digits(phi, parse_qtheta("[2,-1]", 2), 6);
  EXPECT_EQ(w.digits, (std::vector<long>{0, 1, 0, 0, 0, 0}));

  const MinPoly two = mp_of("x - 2");
  EXPECT_EQ(greedy_digits(two, parse_qtheta("1/2", 1), 5).digits, (std::vector<long>{1, 0, 0, 0, 0}));
  EXPECT_EQ(greedy_digits(two, parse_qtheta("1/3", 1), 6).digits, (std::vector<long>{0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(greedy_digits(phi, QThetaNumber::integer(2, 0), 4).digits, (std::vector<long>(4, 0)));

  EXPECT_THROW(greedy_digits(phi, QThetaNumber::integer(2, 1), 3), ValidationError);
  EXPECT_THROW(greedy_digits(phi, parse_qtheta("-1/2", 2), 3), ValidationError);
}

TEST(Greedy, DigitsReproduceTheValue) {
  // x = sum d_k theta^-k + theta^-n x_n with x_n in [0, 1)
  const MinPoly mp = mp_of("x^3 - x - 1");
  const QThetaNumber x = parse_qtheta("[1/3, 1/7, -1/5]", 3);
  ASSERT_EQ(sign_of(mp, x), 1);
  const auto w = greedy_digits(mp, x, 30);
  const Interval theta = mp.theta();
  Interval value(0L, 256), scale(1L, 256);
  for (long d : w.digits) {
    scale = scale / theta;
    value = value + Interval(d, 256) * scale;
  }
  Interval xv(0L, 256);
  Interval power(1L, 256);
  for (const auto& c : x.coords()) {
    xv = xv + Interval(c, 256) * power;
    power = power * theta;
  }
  const Interval rest = xv - value;
  EXPECT_FALSE(rest.is_negative());
  EXPECT_TRUE(certainly_less(rest, scale));
  for (long d : w.digits) EXPECT_TRUE(d == 0 || d == 1);
}

TEST(QuasiGreedy, Examples) {
  EXPECT_EQ(quasi_greedy_one(mp_of("x^2 - x - 1"), 4).digits, (std::vector<long>{1, 0, 1, 0}));
  EXPECT_EQ(quasi_greedy_one(mp_of("x - 2"), 5).digits, (std::vector<long>{1, 1, 1, 1, 1}));
  EXPECT_EQ(quasi_greedy_one(mp_of("x^2 - 2*x - 1"), 4).digits, (std::vector<long>{2, 0, 2, 0}));
  // plastic number: greedy expansion of 1 is 10001, so d*(1) = (10000)^inf
  EXPECT_EQ(quasi_greedy_one(mp_of("x^3 - x - 1"), 10).digits,
            (std::vector<long>{1, 0, 0, 0, 0, 1, 0, 0, 0, 0}));
}

TEST(QuasiGreedy, SelfAdmissible) {
  for (const char* text : kSuite) {
    const auto e = quasi_greedy_one(mp_of(text), 24).digits;
    for (std::size_t i = 1; i < e.size(); ++i) {
      EXPECT_FALSE(std::lexicographical_compare(e.begin(), e.end() - i, e.begin() + i, e.end())) << text << i;
    }
  }
}

TEST(Admissible, Examples) {
  const MinPoly phi = mp_of("x^2 - x - 1");
  EXPECT_EQ(count_admissible(phi, 1), 2);
  EXPECT_EQ(count_admissible(phi, 2), 3);
  EXPECT_EQ(count_admissible(phi, 3), 5);
  const MinPoly two = mp_of("x - 2");
  for (std::size_t n = 1; n <= 20; ++n) EXPECT_EQ(count_admissible(two, n), mpz_class(1) << n);
  for (const char* text : kSuite) {
    const MinPoly mp = mp_of(text);
    EXPECT_EQ(count_admissible(mp, 1), quasi_greedy_one(mp, 1).digits[0] + 1);
  }
}

TEST(Admissible, MatchesBruteForce) {
  for (const char* text : kSuite) {
    const MinPoly mp = mp_of(text);
    const long m = mp.floor_theta();
    const std::size_t n_max = m >= 3 ? 6 : 9;
    const auto e = quasi_greedy_one(mp, n_max).digits;
    for (std::size_t n = 1; n <= n_max; ++n) {
      EXPECT_EQ(count_admissible(mp, n), brute_admissible(m, e, n)) << text << " n=" << n;
    }
  }
}

TEST(LowerBound, BelowCountsAndBanded) {
  for (const char* text : kSuite) {
    const MinPoly mp = mp_of(text);
    const auto counts = count_sequence(mp, mp.floor_theta() >= 4 ? 8 : 12).counts;
    for (const auto& row : lower_bound_check(mp, counts)) {
      EXPECT_TRUE(row.holds) << text << " n=" << row.n;
      EXPECT_LE(row.admissible, mpz_class(static_cast<unsigned long>(row.count)));
    }
  }
  const MinPoly phi = mp_of("x^2 - x - 1");
  const std::vector<std::uint64_t> c{2, 4, 7};
  const auto rows = lower_bound_check(phi, c);
  EXPECT_EQ(rows[1].admissible, 3);
  EXPECT_EQ(rows[2].admissible, 5);
  EXPECT_THROW(lower_bound_check(phi, std::span<const std::uint64_t>()), ValidationError);
}

TEST(DigitWord, Serialization) {
  EXPECT_EQ((DigitWord{{1, 0, 1}}).to_string(1), "101");
  EXPECT_EQ((DigitWord{{10, 0, 3}}).to_string(12), "10,0,3");
  EXPECT_EQ((DigitWord{{}}).to_string(1), "");
}
