#pragma once

// Brute-force references used only by the tests. They deliberately avoid the
// library's companion-matrix path: powers of theta come from long division of
// x^k by the polynomial, and D_n is rebuilt from every digit string.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "perron/int_poly.hpp"

namespace oracle {

/// Coordinates of x^k mod p (p monic) for k = 0..n, each of length deg p.
inline std::vector<std::vector<mpz_class>> powers_by_division(const perron::IntPolynomial& p, std::size_t n) {
  const std::size_t d = p.degree();
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    // x^k as a dense vector, then reduce the top down.
    std::vector<mpz_class> r(std::max(k + 1, d), 0);
    r[k] = 1;
    for (std::size_t top = r.size(); top-- > d;) {
      const mpz_class f = r[top];
      if (f == 0) continue;
      for (std::size_t i = 0; i <= d; ++i) r[top - d + i] -= f * p[i];
    }
    r.resize(d);
    out.push_back(r);
  }
  return out;
}

/// Exact value sum_{k=1}^n digits[k-1] theta^k as coordinates.
inline std::vector<mpz_class> reduce_digits(const std::vector<std::vector<mpz_class>>& powers,
                                            const std::vector<long>& digits) {
  std::vector<mpz_class> acc(powers[0].size(), 0);
  for (std::size_t k = 1; k <= digits.size(); ++k) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += digits[k - 1] * powers[k][i];
  }
  return acc;
}

/// #D_n by listing all (m+1)^n digit strings into an ordered set (small n only).
inline std::size_t brute_force_count(const perron::IntPolynomial& p, long m, std::size_t n) {
  const auto powers = powers_by_division(p, n);
  std::set<std::vector<mpz_class>> values;
  std::vector<long> digits(n, 0);
  for (;;) {
    values.insert(reduce_digits(powers, digits));
    std::size_t k = 0;
    while (k < n && digits[k] == m) digits[k++] = 0;
    if (k == n) break;
    ++digits[k];
  }
  return values.size();
}

/// #D_n for larger n: depth-first over all digit strings with 64-bit
/// coordinates. A histogram pass over the first coordinate cuts the values into
/// slices that fit in memory; each slice is then re-walked, skipping subtrees
/// whose reachable first coordinate misses the slice, and deduplicated by sort.
class BucketedCounter {
 public:
  BucketedCounter(const perron::IntPolynomial& p, long m) : p_(p), m_(m) {}

  std::uint64_t count(std::size_t n, std::uint64_t max_records_per_slice = 1u << 24) {
    switch (p_.degree()) {
      case 1:
        return run<1>(n, max_records_per_slice);
      case 2:
        return run<2>(n, max_records_per_slice);
      case 3:
        return run<3>(n, max_records_per_slice);
      case 4:
        return run<4>(n, max_records_per_slice);
      default:
        throw std::invalid_argument("oracle handles degree <= 4");
    }
  }

  /// Slices used by the last call (for tests of the slicing itself).
  std::size_t last_slices() const { return last_slices_; }

 private:
  static constexpr std::size_t kBins = 1 << 16;

  template <std::size_t D>
  struct Walk {
    using Rec = std::array<std::int64_t, D>;
    std::vector<Rec> step;              // step[i]: theta power added by the i-th digit, largest first
    std::vector<std::int64_t> reach_lo; // reach_lo[i]: least first-coordinate change from digits i..n-1
    std::vector<std::int64_t> reach_hi;
    long m = 0;
    std::int64_t lo = 0, hi = 0;        // current slice of the first coordinate
    std::int64_t base = 0;              // histogram origin
    __int128 span = 1;
    std::vector<std::uint64_t> hist;
    std::vector<Rec> bucket;
    bool histogram = false;

    std::size_t bin(std::int64_t x) const {
      return static_cast<std::size_t>((static_cast<__int128>(x - base) * kBins) / span);
    }

    void dfs(std::size_t i, Rec acc) {
      if (i == step.size()) {
        if (histogram) {
          ++hist[bin(acc[0])];
        } else if (acc[0] >= lo && acc[0] <= hi) {
          bucket.push_back(acc);
        }
        return;
      }
      if (!histogram && (acc[0] + reach_lo[i] > hi || acc[0] + reach_hi[i] < lo)) return;
      for (long a = 0; a <= m; ++a) {
        dfs(i + 1, acc);
        for (std::size_t c = 0; c < D; ++c) acc[c] += step[i][c];
      }
    }
  };

  template <std::size_t D>
  std::uint64_t run(std::size_t n, std::uint64_t max_records_per_slice) {
    const auto big = powers_by_division(p_, n);
    Walk<D> w;
    w.m = m_;
    mpz_class bound = 0;
    for (std::size_t k = n; k >= 1; --k) {
      typename Walk<D>::Rec r{};
      for (std::size_t c = 0; c < D; ++c) {
        if (!big[k][c].fits_slong_p()) throw std::overflow_error("oracle power too large");
        r[c] = big[k][c].get_si();
        bound += m_ * abs(big[k][c]);
      }
      w.step.push_back(r);
    }
    if (bound >= (mpz_class(1) << 62)) throw std::overflow_error("oracle coordinates too large");
    w.reach_lo.assign(n + 1, 0);
    w.reach_hi.assign(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
      const std::int64_t full = m_ * w.step[i][0];
      w.reach_lo[i] = w.reach_lo[i + 1] + std::min<std::int64_t>(0, full);
      w.reach_hi[i] = w.reach_hi[i + 1] + std::max<std::int64_t>(0, full);
    }
    w.base = w.reach_lo[0];
    w.span = static_cast<__int128>(w.reach_hi[0]) - w.reach_lo[0] + 1;
    w.hist.assign(kBins, 0);
    w.histogram = true;
    w.dfs(0, typename Walk<D>::Rec{});
    w.histogram = false;

    // Group consecutive bins into slices of bounded size.
    std::vector<std::pair<std::size_t, std::size_t>> slices;
    std::uint64_t load = 0;
    std::size_t first = 0;
    for (std::size_t b = 0; b < kBins; ++b) {
      if (load > 0 && load + w.hist[b] > max_records_per_slice) {
        slices.emplace_back(first, b - 1);
        first = b;
        load = 0;
      }
      load += w.hist[b];
    }
    slices.emplace_back(first, kBins - 1);
    last_slices_ = slices.size();

    // First coordinate range covered by bins [b0, b1].
    auto bin_start = [&](std::size_t b) {
      // smallest x with bin(x) >= b
      const __int128 num = static_cast<__int128>(b) * w.span;
      return static_cast<std::int64_t>(w.base + (num + kBins - 1) / kBins);
    };
    std::uint64_t total = 0;
    for (const auto& [b0, b1] : slices) {
      w.lo = bin_start(b0);
      w.hi = b1 + 1 == kBins ? w.reach_hi[0] : bin_start(b1 + 1) - 1;
      w.bucket.clear();
      w.dfs(0, typename Walk<D>::Rec{});
      std::sort(w.bucket.begin(), w.bucket.end());
      total += static_cast<std::uint64_t>(std::unique(w.bucket.begin(), w.bucket.end()) - w.bucket.begin());
    }
    return total;
  }

  perron::IntPolynomial p_;
  long m_;
  std::size_t last_slices_ = 0;
};

/// Every nonzero sequence of the given length with |c_k| <= m, leading term > 0.
inline bool any_witness_of_length(const perron::IntPolynomial& p, long m, std::size_t len) {
  const auto powers = powers_by_division(p, len);
  std::vector<long> c(len, -m);
  for (;;) {
    if (c.back() > 0) {
      const auto v = reduce_digits(powers, c);
      if (std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; })) return true;
    }
    std::size_t k = 0;
    while (k < len && c[k] == m) c[k++] = -m;
    if (k == len) return false;
    ++c[k];
  }
}

}  // namespace oracle
