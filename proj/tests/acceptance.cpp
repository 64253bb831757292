// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "perron/beta_expansion.hpp"
#include "perron/digit_sets.hpp"
#include "perron/power_sums.hpp"

using namespace perron;

namespace {

using Clock = std::chrono::steady_clock;

const char* kSuite[] = {"x^2 - x - 1", "x^2 - 2*x - 1", "x^2 - 5*x + 3", "x^3 - x - 1", "x - 2", "x - 3"};

MinPoly mp_of(const std::string& text) { return make_min_poly(parse_polynomial(text)); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass;
  std::string detail;
};

// #D_n for n <= 12, shared by criteria 1 and 3.
std::map<std::string, std::vector<std::uint64_t>> g_counts;

Verdict oracle_equality() {
  const auto t0 = Clock::now();
  std::ostringstream detail;
  bool pass = true;
  for (const char* text : kSuite) {
    const MinPoly mp = mp_of(text);
    const CountSequence seq = count_sequence(mp, 12);
    g_counts[text] = seq.counts;
    if (seq.counts.size() != 12) {
      pass = false;
      detail << text << ": library stopped at n=" << seq.counts.size() << "; ";
      continue;
    }
    oracle::BucketedCounter brute(mp.poly(), mp.floor_theta());
    for (std::size_t n = 1; n <= 12; ++n) {
      const std::uint64_t want = brute.count(n);
      if (want != seq.counts[n - 1]) {
        pass = false;
        detail << text << " n=" << n << ": " << seq.counts[n - 1] << " vs oracle " << want << "; ";
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 300) pass = false;
  detail << "6 polynomials, n<=12, " << secs << " s";
  return {pass, detail.str()};
}

Verdict specific_counts() {
  const auto phi = count_sequence(mp_of("x^2 - x - 1"), 3).counts;
  bool pass = phi == std::vector<std::uint64_t>{2, 4, 7};
  const auto two = count_sequence(mp_of("x - 2"), 10).counts;
  pass = pass && two.size() == 10;
  for (std::size_t n = 1; n <= two.size(); ++n) pass = pass && two[n - 1] == (1ull << (n + 1)) - 1;
  return {pass, "phi (2,4,7); x-2 gives 2^(n+1)-1 for n<=10"};
}

Verdict admissible_bound() {
  bool pass = true;
  std::ostringstream detail;
  double lo = 1e300, hi = 0;
  for (const char* text : kSuite) {
    const MinPoly mp = mp_of(text);
    for (const auto& row : lower_bound_check(mp, g_counts.at(text))) {
      if (!row.holds) {
        pass = false;
        detail << text << " n=" << row.n << " admissible > #D_n; ";
      }
    }
    const Interval theta = mp.theta();
    for (std::size_t n = 5; n <= 20; ++n) {
      const Interval ratio = Interval(count_admissible(mp, n), mp.precision()) / pow(theta, n);
      lo = std::min(lo, ratio.lo_double());
      hi = std::max(hi, ratio.hi_double());
    }
  }
  pass = pass && lo >= 0.2 && hi <= 5;
  detail << "admissible <= #D_n for n<=12; admissible/theta^n in [" << lo << ", " << hi << "] for n in [5,20]";
  return {pass, detail.str()};
}

Verdict totally_real_ratio() {
  bool pass = true;
  std::ostringstream detail;
  for (const char* text : {"x^2 - x - 1", "x^2 - 2*x - 1"}) {
    const MinPoly mp = mp_of(text);
    const CountSequence seq = count_sequence(mp, 20);
    const std::size_t reached = seq.counts.size();
    if (reached < 16) pass = false;
    double lo = 1e300, hi = 0;
    for (const auto& row : growth_ratios(seq.counts, mp)) {
      lo = std::min(lo, row.ratio.lo_double());
      hi = std::max(hi, row.ratio.hi_double());
    }
    pass = pass && hi / lo <= 10;
    detail << text << ": n<=" << reached << " max/min r_n = " << hi / lo << "; ";
  }
  return {pass, detail.str()};
}

Verdict witness_search() {
  const auto t0 = Clock::now();
  const MinPoly mp = mp_of("x^2 - 5*x + 3");
  const WitnessResult r = find_height_witness(mp);
  const double secs = seconds_since(t0);
  bool pass = r.witness && verify_witness(*r.witness, mp) && secs < 60;
  std::ostringstream detail;
  if (r.witness) {
    detail << "x^2-5x+3 -> (";
    for (std::size_t k = 0; k < r.witness->coeffs.size(); ++k) {
      const long c = r.witness->coeffs[k];
      pass = pass && std::abs(c) <= 4;
      detail << (k ? "," : "") << c;
    }
    detail << ") in " << secs << " s";
  } else {
    detail << "x^2-5x+3: " << r.failure;
  }
  const auto phi = find_height_witness(mp_of("x^2 - x - 1"));
  const auto two = find_height_witness(mp_of("x - 2"));
  pass = pass && phi.witness && phi.witness->coeffs == std::vector<long>{-1, -1, 1};
  pass = pass && two.witness && two.witness->coeffs == std::vector<long>{-2, 1};
  detail << "; phi (-1,-1,1), x-2 (-2,1)";
  return {pass, detail.str()};
}

Verdict witness_minimality() {
  const auto t0 = Clock::now();
  const MinPoly mp = mp_of("x^2 - x - 1");
  bool pass = true;
  for (std::size_t len = 1; len < 3; ++len) pass = pass && !oracle::any_witness_of_length(mp.poly(), 1, len);
  const double secs = seconds_since(t0);
  pass = pass && secs < 1;
  return {pass, "no phi relation of length < 3 (" + std::to_string(secs) + " s)"};
}

Verdict traces() {
  bool pass = true;
  const auto phi = newton_traces(mp_of("x^2 - x - 1"), 3).values;
  pass = pass && phi == std::vector<mpz_class>{1, 3, 4};
  double worst = 0;
  for (const char* text : kSuite) {
    const MinPoly mp = mp_of(text);
    const auto alpha = newton_traces(mp, 30).values;
    for (unsigned long k = 1; k <= 30; ++k) {
      const Interval re = conjugate_power_sum(mp, k, mp.precision()).re();
      // exactly one integer inside: alpha_k
      pass = pass && re.contains(alpha[k - 1]) && re.floor_hi() - re.floor_lo() <= 1 &&
             !(re.contains(alpha[k - 1] - 1) || re.contains(alpha[k - 1] + 1));
    }
    const auto ratio = trace_ratio(mp, 60).back().ratio;
    worst = std::max(worst, std::max(std::abs(ratio.lo_double() - 1), std::abs(ratio.hi_double() - 1)));
  }
  pass = pass && worst < 1e-3;
  std::ostringstream detail;
  detail << "phi (1,3,4); enclosures pin alpha_k for k<=30; max |alpha_60/theta^60 - 1| = " << worst;
  return {pass, detail.str()};
}

Verdict angular() {
  const MinPoly mp = mp_of("x^3 - x - 1");
  const std::size_t j = mp.conjugates().nonreal_indices().at(0);
  const AngularStats stats = angular_average(mp, j, 10000);
  bool pass = stats.averages.size() == 10000;
  for (const auto& a : stats.averages) pass = pass && a.mag().to_double(MPFR_RNDU) <= 1;
  const double last = stats.averages.back().mag().to_double(MPFR_RNDU);
  pass = pass && last < 0.05;
  std::ostringstream detail;
  detail << "plastic pair j=" << j << ": |A_t| <= 1 for t<=10000, |A_10000| <= " << last;
  return {pass, detail.str()};
}

Verdict gap_trend() {
  const auto t0 = Clock::now();
  const MinPoly mp = mp_of("x^2 - x - 1");
  const GapResult g5 = min_gap(mp, 5);
  const GapResult g14 = min_gap(mp, 14);
  const double secs = seconds_since(t0);
  const bool pass = certainly_less(g14.normalized, g5.normalized) && secs < 120;
  std::ostringstream detail;
  detail << "phi gap*theta^n: n=14 upper " << g14.normalized.hi_double() << " vs n=5 lower "
         << g5.normalized.lo_double() << " (gap " << g5.gap.mid_double() << " and " << g14.gap.mid_double() << ", "
         << secs << " s)";
  return {pass, detail.str()};
}

Verdict classification() {
  struct Case {
    const char* poly;
    PerronVerdict verdict;
    int exit_code;
  };
  const Case cases[] = {{"x^2-x-1", PerronVerdict::perron, 0},
                        {"x^2-2", PerronVerdict::not_perron, 1},
                        {"x^2-5x+3", PerronVerdict::perron, 0},
                        {"x-2", PerronVerdict::perron, 0}};
  bool pass = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const PerronVerdict v = is_perron(mp_of(c.poly));
    std::ostringstream out, err;
    const int code = cli::run_cli({"check", "--poly", c.poly}, out, err);
    pass = pass && v == c.verdict && code == c.exit_code;
    detail << c.poly << "=" << to_string(v) << "/exit " << code << " ";
  }
  std::ostringstream out, err;
  const int invalid = cli::run_cli({"check", "--poly", "2x^2-1"}, out, err);
  pass = pass && invalid == 3;
  detail << "invalid=exit " << invalid;
  return {pass, detail.str()};
}

Verdict determinism() {
  bool pass = true;
  for (const char* fmt : {"csv", "json"}) {
    std::string outputs[2];
    const char* threads[2] = {"1", "8"};
    for (int i = 0; i < 2; ++i) {
      std::ostringstream out, err;
      const int code = cli::run_cli(
          {"count", "--poly", "x^2-x-1", "--n", "14", "--with-gaps", "--threads", threads[i], "--format", fmt}, out,
          err);
      pass = pass && code == 0;
      outputs[i] = out.str();
    }
    pass = pass && !outputs[0].empty() && outputs[0] == outputs[1];
  }
  return {pass, "count phi n<=14 (csv and json, with gaps): threads 1 vs 8 byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"oracle equality of counts", oracle_equality},
      {"specific counts", specific_counts},
      {"admissible-word lower bound", admissible_bound},
      {"bounded #D_n/theta^n for totally real theta", totally_real_ratio},
      {"height witness", witness_search},
      {"witness minimality", witness_minimality},
      {"traces", traces},
      {"angular statistic", angular},
      {"normalized gap trend", gap_trend},
      {"Perron classification", classification},
      {"determinism across thread counts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << v.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
