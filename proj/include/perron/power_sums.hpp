#pragma once

// Power sums alpha_k = sum_j theta_j^k over the conjugates, and the numeric
// statistics of single conjugates that sit next to them.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "perron/interval.hpp"
#include "perron/min_poly.hpp"

namespace perron {

/// alpha_1, ..., alpha_n; values[k-1] = alpha_k.
struct TraceSequence {
  std::vector<mpz_class> values;
};

/// Exact traces: Newton's identities up to k = d, then the recurrence
/// alpha_k = -sum_{i<d} p_i alpha_{k-d+i}.
TraceSequence newton_traces(const MinPoly& mp, std::size_t n);

/// Enclosure of sum_j theta_j^k computed from the root disks.
ComplexInterval conjugate_power_sum(const MinPoly& mp, unsigned long k, Bits precision);

struct TraceRatioRow {
  std::size_t k;
  mpz_class alpha;
  Interval ratio;  // alpha_k / theta^k
};

std::vector<TraceRatioRow> trace_ratio(const MinPoly& mp, std::size_t n);

/// Partial means A_t = (1/t) sum_{k<=t} Re((theta_j/|theta_j|)^k), t = 1..n.
struct AngularStats {
  std::size_t j;
  std::size_t n;
  std::vector<Interval> averages;
};

/// Throws ValidationError when j is out of range or names a real conjugate.
AngularStats angular_average(const MinPoly& mp, std::size_t j, std::size_t n);

struct PowerSumRow {
  std::size_t t;
  Interval sum;         // sum_{k<=t} Re(theta_j^k)
  Interval normalizer;  // sqrt(t) |theta_j|^t
};

std::vector<PowerSumRow> real_power_sum(const MinPoly& mp, std::size_t j, std::size_t n);

}  // namespace perron
