#include "perron/power_sums.hpp"

#include "perron/errors.hpp"

namespace perron {

namespace {

// Binary powering: a running product would compound the rectangular
// wrapping of the box at every step.
ComplexInterval cpow(const ComplexInterval& z, unsigned long k) {
  ComplexInterval result(Interval(1L, z.prec()));
  ComplexInterval base = z;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

void check_index(const MinPoly& mp, std::size_t j) {
  if (j < 1 || j > mp.degree()) {
    throw ValidationError("conjugate index " + std::to_string(j) + " out of range 1.." + std::to_string(mp.degree()));
  }
}

}  // namespace

TraceSequence newton_traces(const MinPoly& mp, std::size_t n) {
  const IntPolynomial& p = mp.poly();
  const std::size_t d = p.degree();
  TraceSequence out;
  std::vector<mpz_class>& a = out.values;
  a.reserve(n);
  // With p = x^d + c_{d-1} x^{d-1} + ... + c_0 and e-coefficients c_{d-i}:
  // alpha_k + c_{d-1} alpha_{k-1} + ... + c_{d-k+1} alpha_1 + k c_{d-k} = 0.
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class acc = 0;
    if (k <= d) {
      for (std::size_t i = 1; i < k; ++i) acc -= p[d - i] * a[k - i - 1];
      acc -= mpz_class(static_cast<unsigned long>(k)) * p[d - k];
    } else {
      for (std::size_t i = 0; i < d; ++i) acc -= p[i] * a[k - d + i - 1];
    }
    a.push_back(acc);
  }
  return out;
}

ComplexInterval conjugate_power_sum(const MinPoly& mp, unsigned long k, Bits precision) {
  const auto set = mp.conjugates_at(precision);
  ComplexInterval sum(Interval(0L, set->precision()));
  for (std::size_t j = 1; j <= set->size(); ++j) sum = sum + cpow(set->enclosure(j), k);
  return sum;
}

std::vector<TraceRatioRow> trace_ratio(const MinPoly& mp, std::size_t n) {
  const TraceSequence alpha = newton_traces(mp, n);
  const Bits prec = mp.precision();
  const Interval theta = mp.theta(prec);
  std::vector<TraceRatioRow> rows;
  Interval power(1L, prec);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * theta;
    rows.push_back({k, alpha.values[k - 1], Interval(alpha.values[k - 1], prec) / power});
  }
  return rows;
}

AngularStats angular_average(const MinPoly& mp, std::size_t j, std::size_t n) {
  check_index(mp, j);
  const auto& set = mp.conjugates();
  if (set.root(j).is_real) throw ValidationError("conjugate " + std::to_string(j) + " is real");
  const ComplexInterval z = set.enclosure(j);
  const ComplexInterval unit = z / z.modulus();
  AngularStats stats{j, n, {}};
  stats.averages.reserve(n);
  Interval sum(0L, set.precision());
  for (std::size_t t = 1; t <= n; ++t) {
    sum = sum + cpow(unit, t).re();
    stats.averages.push_back(sum / Interval(static_cast<long>(t), set.precision()));
  }
  return stats;
}

std::vector<PowerSumRow> real_power_sum(const MinPoly& mp, std::size_t j, std::size_t n) {
  check_index(mp, j);
  const auto& set = mp.conjugates();
  const ComplexInterval z = set.enclosure(j);
  const Interval modulus = z.modulus();
  const Bits prec = set.precision();
  std::vector<PowerSumRow> rows;
  rows.reserve(n);
  Interval sum(0L, prec);
  for (std::size_t t = 1; t <= n; ++t) {
    sum = sum + cpow(z, t).re();
    const Interval norm = sqrt(Interval(static_cast<long>(t), prec)) * pow(modulus, t);
    rows.push_back({t, sum, norm});
  }
  return rows;
}

}  // namespace perron
