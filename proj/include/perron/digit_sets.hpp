#pragma once

// Enumeration of D_n(theta) = { sum_{k=1}^n a_k theta^k : a_k in {0..m} },
// m = floor(theta), and the searches built on top of it.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "perron/algebraic_int.hpp"
#include "perron/interval.hpp"
#include "perron/min_poly.hpp"

namespace perron {

struct EnumerationOptions {
  std::uint64_t memory_budget = std::uint64_t{1} << 30;
  unsigned threads = 1;
  /// Skip the packed 64-bit representation (testing hook).
  bool force_generic = false;
};

namespace detail {

template <std::size_t D>
using Packed = std::array<std::int64_t, D>;
using Generic = std::vector<mpz_class>;

using LevelStore = std::variant<std::vector<Packed<1>>, std::vector<Packed<2>>, std::vector<Packed<3>>,
                                std::vector<Packed<4>>, std::vector<Packed<5>>, std::vector<Packed<6>>,
                                std::vector<Packed<7>>, std::vector<Packed<8>>, std::vector<Generic>>;

}  // namespace detail

/// The deduplicated set D_n(theta), stored as coordinate vectors sorted
/// lexicographically. Level 0 is {0}, the empty sum.
class LevelSet {
 public:
  static LevelSet initial(const MinPoly& mp, const EnumerationOptions& options = {});

  std::size_t n() const { return n_; }
  std::size_t count() const;
  std::size_t dim() const { return dim_; }
  /// Approximate heap footprint of the stored elements.
  std::uint64_t bytes() const;
  bool is_packed() const { return store_.index() + 1 != std::variant_size_v<detail::LevelStore>; }

  AlgebraicInt element(std::size_t i) const;
  std::vector<AlgebraicInt> elements() const;
  bool contains(const AlgebraicInt& a) const;

  LevelSet(std::size_t n, std::size_t dim, detail::LevelStore store)
      : n_(n), dim_(dim), store_(std::move(store)) {}
  const detail::LevelStore& store() const { return store_; }

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  detail::LevelStore store_;
};

/// D_{n+1} = theta * (D_n + {0, ..., m}): reindexing sum_{k=1}^{n+1} a_k theta^k
/// as theta * (a_1 + sum_{k=1}^{n} a_{k+1} theta^k) gives the recurrence.
/// Throws ResourceExhausted when the result cannot be held within the budget.
LevelSet advance_level(const LevelSet& level, const MinPoly& mp, const EnumerationOptions& options = {});

struct CountSequence {
  /// counts[i] = #D_{i+1}.
  std::vector<std::uint64_t> counts;
  std::size_t requested = 0;
  bool truncated = false;
  std::string note;
};

/// (#D_1, ..., #D_k) for the largest k <= n_max reachable within the memory
/// budget. The last level is only counted, never stored, so it may be larger
/// than the budget would allow to keep. Deterministic for any thread count.
CountSequence count_sequence(const MinPoly& mp, std::size_t n_max, const EnumerationOptions& options = {});

struct GrowthRow {
  std::size_t n;
  std::uint64_t count;
  Interval ratio;             // #D_n / theta^n
  Interval ratio_over_sqrt_n; // #D_n / (sqrt(n) theta^n)
};

std::vector<GrowthRow> growth_ratios(std::span<const std::uint64_t> counts, const MinPoly& mp);

/// Nonzero (c_1, ..., c_n) with |c_k| <= m and sum c_k theta^k = 0.
struct CollisionWitness {
  std::vector<long> coeffs;
  std::size_t length() const { return coeffs.size(); }
};

bool verify_witness(const CollisionWitness& w, const MinPoly& mp);

struct WitnessOptions {
  std::size_t max_depth = 64;
  std::size_t state_cap = 2'000'000;
  /// Conjugates whose modulus enclosure meets [1 - eps, 1 + eps] get a depth-dependent bound.
  double unit_tolerance = 1e-9;
};

struct WitnessStats {
  std::size_t states = 0;
  std::size_t pruned = 0;
  std::size_t depth = 0;
  std::size_t widest_layer = 0;
  std::size_t expanding = 0;
  std::size_t contracting = 0;
  std::size_t near_unit = 0;
};

struct WitnessResult {
  std::optional<CollisionWitness> witness;
  WitnessStats stats;
  /// Why the search stopped without a witness.
  std::string failure;
};

/// Breadth-first search over V in Z[theta] with V -> theta V + c, c in [-m, m],
/// seeded by V = c_n in [1, m]; reaching V = 0 yields a relation. States are
/// pruned when a certified embedding bound shows 0 is unreachable. Returns the
/// shortest witness, lexicographically smallest in (c_1, ..., c_n) among those.
WitnessResult find_height_witness(const MinPoly& mp, const WitnessOptions& options = {});

struct GapResult {
  std::size_t n;
  std::size_t count;
  Interval gap;         // min |x - y| over distinct x, y in D_n
  Interval normalized;  // gap * theta^n
};

/// Certified minimal positive gap of D_n (n >= 1).
GapResult min_gap(const MinPoly& mp, std::size_t n, const EnumerationOptions& options = {});

/// a_k = sum_{i=1}^{r} coeffs[i-1] * a_{k-i}.
struct LinearRecurrence {
  std::vector<mpz_class> coeffs;
  std::size_t order() const { return coeffs.size(); }
};

/// Smallest-order integer linear recurrence of order <= len/2 reproducing every
/// supplied term. Conjectural by nature: it only fits the data given.
std::optional<LinearRecurrence> guess_recurrence(std::span<const mpz_class> terms);
std::optional<LinearRecurrence> guess_recurrence(std::span<const std::uint64_t> terms);

}  // namespace perron
