#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "perron/errors.hpp"
#include "perron/power_sums.hpp"

using namespace perron;

namespace {

MinPoly mp_of(const char* text) { return make_min_poly(parse_polynomial(text)); }

const char* kSuite[] = {"x^2 - x - 1", "x^2 - 2*x - 1", "x^2 - 5*x + 3", "x^3 - x - 1", "x - 2", "x - 3"};

std::vector<long> as_longs(const TraceSequence& t) {
  std::vector<long> out;
  for (const auto& v : t.values) out.push_back(v.get_si());
  return out;
}

}  // namespace

TEST(Traces, Examples) {
  EXPECT_EQ(as_longs(newton_traces(mp_of("x^2 - x - 1"), 3)), (std::vector<long>{1, 3, 4}));
  const auto two = newton_traces(mp_of("x - 2"), 40);
  for (std::size_t k = 1; k <= 40; ++k) EXPECT_EQ(two.values[k - 1], mpz_class(1) << k);
  EXPECT_EQ(as_longs(newton_traces(mp_of("x^2 - 2"), 4)), (std::vector<long>{0, 4, 0, 8}));
  // plastic number: 0, 2, 3, 2, 5, 5, 7 (Perrin sequence from index 1)
  EXPECT_EQ(as_longs(newton_traces(mp_of("x^3 - x - 1"), 7)), (std::vector<long>{0, 2, 3, 2, 5, 5, 7}));
}

TEST(Traces, NewtonAgainstHigherDegree) {
  // x^4 - 2x^3 + 3x - 7: e1 = 2, e2 = 0, e3 = -3, e4 = -7
  // p1 = 2, p2 = e1 p1 - 2 e2 = 4, p3 = e1 p2 - e2 p1 + 3 e3 = -1.
  const MinPoly mp = mp_of("x^4 - 2*x^3 + 3*x - 7");
  const auto t = newton_traces(mp, 12);
  EXPECT_EQ(t.values[0], 2);
  EXPECT_EQ(t.values[1], 4);
  EXPECT_EQ(t.values[2], -1);
  for (unsigned long k = 1; k <= 12; ++k) {
    const ComplexInterval s = conjugate_power_sum(mp, k, 256);
    EXPECT_TRUE(s.re().contains(t.values[k - 1])) << k;
    EXPECT_TRUE(s.im().contains_zero());
  }
}

TEST(Traces, EnclosuresPinTheInteger) {
  for (const char* text : kSuite) {
    const MinPoly mp = mp_of(text);
    const auto t = newton_traces(mp, 30);
    for (unsigned long k = 1; k <= 30; ++k) {
      const ComplexInterval s = conjugate_power_sum(mp, k, mp.precision());
      EXPECT_TRUE(s.re().contains(t.values[k - 1])) << text << " k=" << k;
      EXPECT_EQ(s.re().floor_lo() + 1 >= s.re().floor_hi(), true);
      EXPECT_LT(s.re().width().to_double(MPFR_RNDU), 0.5);
    }
  }
}

TEST(Traces, SatisfyPolynomialRecurrence) {
  for (const char* text : kSuite) {
    const MinPoly mp = mp_of(text);
    const auto a = newton_traces(mp, 40).values;
    const std::size_t d = mp.degree();
    for (std::size_t k = d + 1; k <= 40; ++k) {
      mpz_class acc = a[k - 1];
      for (std::size_t i = 0; i < d; ++i) acc += mp.poly()[i] * a[k - d + i - 1];
      EXPECT_EQ(acc, 0) << text << " k=" << k;
    }
  }
}

TEST(TraceRatio, ConvergesToOne) {
  for (const char* text : kSuite) {
    const auto rows = trace_ratio(mp_of(text), 60);
    ASSERT_EQ(rows.size(), 60u);
    const double r = rows.back().ratio.mid_double();
    EXPECT_LT(std::abs(r - 1), 1e-3) << text;
  }
  const auto phi = trace_ratio(mp_of("x^2 - x - 1"), 20);
  EXPECT_LT(std::abs(phi[19].ratio.mid_double() - 1), 1e-4);

  // second root of x^2 - 5x + 3 is positive, so alpha_k > theta^k
  for (const auto& row : trace_ratio(mp_of("x^2 - 5*x + 3"), 30)) {
    EXPECT_TRUE(certainly_less(Interval(1L, 64), row.ratio)) << row.k;
  }
  for (const auto& row : trace_ratio(mp_of("x - 2"), 10)) EXPECT_TRUE(row.ratio.contains(mpz_class(1)));
}

TEST(Angular, PlasticPair) {
  const MinPoly mp = mp_of("x^3 - x - 1");
  const auto nonreal = mp.conjugates().nonreal_indices();
  ASSERT_EQ(nonreal.size(), 2u);
  const auto a = angular_average(mp, nonreal[0], 10000);
  const auto b = angular_average(mp, nonreal[1], 10000);
  ASSERT_EQ(a.averages.size(), 10000u);
  for (std::size_t t = 0; t < a.averages.size(); ++t) {
    ASSERT_LE(a.averages[t].hi_double(), 1.0 + 1e-12);
    ASSERT_GE(a.averages[t].lo_double(), -1.0 - 1e-12);
    ASSERT_EQ(a.averages[t].mid_double(), b.averages[t].mid_double());
  }
  EXPECT_LT(a.averages.back().mag().to_double(MPFR_RNDU), 0.05);

  // double-precision oracle
  const std::complex<double> z(-0.6623589786223730, 0.5622795120623013);
  const std::complex<double> u = z / std::abs(z);
  double s = 0;
  std::complex<double> w = 1;
  for (int k = 1; k <= 1000; ++k) {
    w *= u;
    s += w.real();
  }
  EXPECT_NEAR(a.averages[999].mid_double(), s / 1000, 1e-9);
}

TEST(Angular, RejectsRealConjugate) {
  EXPECT_THROW(angular_average(mp_of("x^3 - x - 1"), 1, 10), ValidationError);
  EXPECT_THROW(angular_average(mp_of("x^2 - x - 1"), 2, 10), ValidationError);
  EXPECT_THROW(angular_average(mp_of("x^3 - x - 1"), 7, 10), ValidationError);
}

TEST(PowerSum, Examples) {
  const auto two = real_power_sum(mp_of("x - 2"), 1, 20);
  for (const auto& row : two) {
    EXPECT_TRUE(row.sum.contains((mpz_class(1) << (row.t + 1)) - 2)) << row.t;
  }

  const MinPoly r2 = mp_of("x^2 - 2");
  ASSERT_EQ(r2.conjugates().real_indices().size(), 2u);
  const auto neg = real_power_sum(r2, 2, 20);
  for (const auto& row : neg) {
    const double bound = std::sqrt(2.0) * std::pow(2.0, row.t / 2.0 + 1);
    EXPECT_LE(row.sum.mag().to_double(MPFR_RNDU), bound);
    double exact = 0;
    for (std::size_t k = 1; k <= row.t; ++k) exact += std::pow(-std::sqrt(2.0), static_cast<double>(k));
    EXPECT_NEAR(row.sum.mid_double(), exact, 1e-9 * std::max(1.0, std::abs(exact)));
  }
}

TEST(PowerSum, PlasticPairSumsConverge) {
  // |theta_j| < 1 here, so the partial sums converge to Re(z / (1 - z)) with a
  // geometric tail and the sqrt(t)|z|^t normalizer is not a bound.
  const MinPoly mp = mp_of("x^3 - x - 1");
  const std::size_t j = mp.conjugates().nonreal_indices()[0];
  const auto rows = real_power_sum(mp, j, 2000);
  const std::complex<double> z(-0.6623589786223730, 0.5622795120623013);
  const double limit = (z / (1.0 - z)).real();
  for (const auto& row : rows) {
    const double tail = std::pow(std::abs(z), row.t + 1.0) / (1 - std::abs(z));
    ASSERT_LE(std::abs(row.sum.mid_double() - limit), tail + 1e-12) << row.t;
    ASSERT_TRUE(row.normalizer.is_positive());
  }
}
