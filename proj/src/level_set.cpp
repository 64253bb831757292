#include <algorithm>
#include <exception>
#include <thread>

#include "perron/digit_sets.hpp"
#include "perron/errors.hpp"

namespace perron {

using detail::Generic;
using detail::LevelStore;
using detail::Packed;

namespace {

constexpr std::size_t kMaxPackedDim = 8;
constexpr std::size_t kMaxShards = std::size_t{1} << 16;

// Companion data for theta * x in both coordinate representations.
struct Companion {
  std::size_t d = 0;
  long m = 0;
  std::vector<std::int64_t> p;      // p_0 .. p_{d-1}
  std::vector<mpz_class> p_big;
  mpz_class theta_big;              // only used when d == 1
  bool packable = false;

  explicit Companion(const MinPoly& mp) : d(mp.degree()), m(mp.floor_theta()) {
    const auto& coeffs = mp.poly().coeffs();
    packable = d <= kMaxPackedDim;
    for (std::size_t i = 0; i < d; ++i) {
      p_big.push_back(coeffs[i]);
      packable = packable && coeffs[i].fits_slong_p();
      p.push_back(coeffs[i].fits_slong_p() ? coeffs[i].get_si() : 0);
    }
    theta_big = -coeffs[0];
  }
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

template <class Rec>
struct Ops;

template <std::size_t D>
struct Ops<Packed<D>> {
  using Rec = Packed<D>;

  static Rec zero(const Companion&) { return Rec{}; }

  static Rec times_theta(const Rec& e, const Companion& c) {
    Rec out;
    const std::int64_t top = e[D - 1];
    for (std::size_t i = 0; i < D; ++i) {
      std::int64_t prod = 0;
      if (__builtin_mul_overflow(top, c.p[i], &prod)) throw CoordinateOverflow();
      const std::int64_t below = i == 0 ? 0 : e[i - 1];
      if (__builtin_sub_overflow(below, prod, &out[i])) throw CoordinateOverflow();
    }
    return out;
  }

  // r += digit * theta
  static void add_theta_multiple(Rec& r, long digit, const Companion& c) {
    if constexpr (D == 1) {
      std::int64_t prod = 0;
      if (__builtin_mul_overflow(static_cast<std::int64_t>(digit), -c.p[0], &prod)) throw CoordinateOverflow();
      if (__builtin_add_overflow(r[0], prod, &r[0])) throw CoordinateOverflow();
    } else {
      if (__builtin_add_overflow(r[1], static_cast<std::int64_t>(digit), &r[1])) throw CoordinateOverflow();
    }
  }

  static std::uint64_t hash(const Rec& r) {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (std::int64_t x : r) h = mix(h ^ static_cast<std::uint64_t>(x));
    return h;
  }

  static std::uint64_t record_bytes(const std::vector<Rec>&) { return sizeof(Rec); }

  static std::vector<mpz_class> to_mpz(const Rec& r) {
    std::vector<mpz_class> out;
    out.reserve(D);
    for (std::int64_t x : r) out.emplace_back(static_cast<long>(x));
    return out;
  }

  static std::optional<Rec> from_mpz(const std::vector<mpz_class>& v) {
    if (v.size() != D) return std::nullopt;
    Rec r;
    for (std::size_t i = 0; i < D; ++i) {
      if (!v[i].fits_slong_p()) return std::nullopt;
      r[i] = v[i].get_si();
    }
    return r;
  }
};

template <>
struct Ops<Generic> {
  using Rec = Generic;

  static Rec zero(const Companion& c) { return Rec(c.d, 0); }

  static Rec times_theta(const Rec& e, const Companion& c) {
    Rec out(c.d);
    const mpz_class& top = e[c.d - 1];
    for (std::size_t i = 0; i < c.d; ++i) out[i] = (i == 0 ? mpz_class(0) : e[i - 1]) - top * c.p_big[i];
    return out;
  }

  static void add_theta_multiple(Rec& r, long digit, const Companion& c) {
    if (c.d == 1) {
      r[0] += digit * c.theta_big;
    } else {
      r[1] += digit;
    }
  }

  static std::uint64_t hash(const Rec& r) {
    std::uint64_t h = 0x243F6A8885A308D3ULL;
    for (const auto& x : r) {
      const std::uint64_t low = mpz_getlimbn(x.get_mpz_t(), 0);
      h = mix(h ^ low ^ (static_cast<std::uint64_t>(sgn(x) + 1) << 62));
    }
    return h;
  }

  static std::uint64_t record_bytes(const std::vector<Rec>& level) {
    std::size_t limbs = 1;
    if (!level.empty()) {
      for (const auto& x : level.back()) limbs = std::max(limbs, mpz_size(x.get_mpz_t()));
    }
    const std::size_t d = level.empty() ? 1 : level.back().size();
    return sizeof(Rec) + d * (sizeof(mpz_class) + 8 * limbs + 16);
  }

  static std::vector<mpz_class> to_mpz(const Rec& r) { return r; }
  static std::optional<Rec> from_mpz(const std::vector<mpz_class>& v) { return v; }
};

template <class Rec>
std::vector<Rec> expand_shard(const std::vector<Rec>& level, const Companion& c, std::size_t shard,
                              std::size_t shards, std::size_t reserve) {
  std::vector<Rec> out;
  out.reserve(reserve);
  for (const Rec& e : level) {
    const Rec base = Ops<Rec>::times_theta(e, c);
    for (long digit = 0; digit <= c.m; ++digit) {
      Rec cand = base;
      if (digit) Ops<Rec>::add_theta_multiple(cand, digit, c);
      if (shards == 1 || Ops<Rec>::hash(cand) % shards == shard) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class Rec>
struct StepOutcome {
  bool feasible = false;          // the count for the next level was obtained
  std::uint64_t count = 0;
  std::optional<std::vector<Rec>> next;  // present when the level was materialized
};

// One application of D -> theta * (D + {0..m}), split into hash shards so that
// every shard's candidate buffer fits next to the current level.
template <class Rec>
StepOutcome<Rec> step(const std::vector<Rec>& level, const Companion& c, const EnumerationOptions& options,
                      bool materialize) {
  StepOutcome<Rec> outcome;
  const std::uint64_t budget = options.memory_budget;
  const std::uint64_t rec = Ops<Rec>::record_bytes(level);
  const std::uint64_t level_bytes = rec * level.size();
  if (level_bytes >= budget) return outcome;
  const std::uint64_t avail = budget - level_bytes;
  const std::uint64_t shard_avail = materialize ? avail / 2 : avail;
  const unsigned threads = std::max(1u, options.threads);
  const std::uint64_t candidates = static_cast<std::uint64_t>(level.size()) * static_cast<std::uint64_t>(c.m + 1);

  std::size_t shards = 1;
  auto shard_bytes = [&](std::size_t s) { return (candidates / s + candidates / (4 * s) + 64) * rec; };
  while (shards <= kMaxShards && std::min<std::size_t>(threads, shards) * shard_bytes(shards) > shard_avail) {
    shards *= 2;
  }
  if (shards > kMaxShards) return outcome;
  while (shards < threads) shards *= 2;
  const std::size_t reserve = static_cast<std::size_t>(shard_bytes(shards) / rec);

  std::vector<Rec> next;
  bool storing = materialize;
  std::uint64_t count = 0;
  for (std::size_t first = 0; first < shards; first += threads) {
    const std::size_t wave = std::min<std::size_t>(threads, shards - first);
    std::vector<std::vector<Rec>> results(wave);
    if (wave == 1) {
      results[0] = expand_shard(level, c, first, shards, reserve);
    } else {
      std::vector<std::exception_ptr> errors(wave);
      std::vector<std::thread> workers;
      workers.reserve(wave);
      for (std::size_t w = 0; w < wave; ++w) {
        workers.emplace_back([&, w] {
          try {
            results[w] = expand_shard(level, c, first + w, shards, reserve);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : workers) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (auto& r : results) {
      count += r.size();
      if (!storing) continue;
      const std::size_t needed = next.size() + r.size();
      if (needed > next.capacity()) {
        const std::size_t new_cap = std::max(needed, next.capacity() + next.capacity() / 2);
        if (level_bytes + (next.capacity() + new_cap) * rec > budget) {
          storing = false;
          std::vector<Rec>().swap(next);
          continue;
        }
        next.reserve(new_cap);
      }
      std::move(r.begin(), r.end(), std::back_inserter(next));
    }
  }
  outcome.feasible = true;
  outcome.count = count;
  if (storing) {
    // Shards partition by hash; a global sort restores the canonical order.
    if (shards > 1) std::sort(next.begin(), next.end());
    next.shrink_to_fit();
    outcome.next = std::move(next);
  }
  return outcome;
}

template <class Rec>
std::vector<Generic> to_generic(const std::vector<Rec>& level) {
  std::vector<Generic> out;
  out.reserve(level.size());
  for (const Rec& r : level) out.push_back(Ops<Rec>::to_mpz(r));
  return out;
}

template <std::size_t... Ds>
LevelStore make_zero_store(std::size_t d, std::index_sequence<Ds...>) {
  LevelStore store = std::vector<Generic>{};
  ((d == Ds + 1 ? (store = std::vector<Packed<Ds + 1>>{Packed<Ds + 1>{}}, 0) : 0), ...);
  return store;
}

LevelStore zero_store(const Companion& c, bool force_generic) {
  if (c.packable && !force_generic) return make_zero_store(c.d, std::make_index_sequence<kMaxPackedDim>{});
  return std::vector<Generic>{Generic(c.d, 0)};
}

// Runs one step on whatever representation the store holds, falling back to
// arbitrary precision when the packed path overflows.
struct StoreStep {
  bool feasible = false;
  std::uint64_t count = 0;
  std::optional<LevelStore> next;
};

StoreStep step_store(LevelStore& store, const Companion& c, const EnumerationOptions& options, bool materialize) {
  for (;;) {
    try {
      return std::visit(
          [&](const auto& level) -> StoreStep {
            auto out = step(level, c, options, materialize);
            StoreStep s{out.feasible, out.count, std::nullopt};
            if (out.next) s.next = LevelStore(std::move(*out.next));
            return s;
          },
          store);
    } catch (const CoordinateOverflow&) {
      store = std::visit([](const auto& level) { return LevelStore(to_generic(level)); }, store);
    }
  }
}

}  // namespace

LevelSet LevelSet::initial(const MinPoly& mp, const EnumerationOptions& options) {
  const Companion c(mp);
  return LevelSet(0, c.d, zero_store(c, options.force_generic));
}

std::size_t LevelSet::count() const {
  return std::visit([](const auto& v) { return v.size(); }, store_);
}

std::uint64_t LevelSet::bytes() const {
  return std::visit(
      [](const auto& v) {
        using Rec = typename std::decay_t<decltype(v)>::value_type;
        return Ops<Rec>::record_bytes(v) * v.size();
      },
      store_);
}

AlgebraicInt LevelSet::element(std::size_t i) const {
  return std::visit(
      [i](const auto& v) {
        using Rec = typename std::decay_t<decltype(v)>::value_type;
        return AlgebraicInt(Ops<Rec>::to_mpz(v.at(i)));
      },
      store_);
}

std::vector<AlgebraicInt> LevelSet::elements() const {
  std::vector<AlgebraicInt> out;
  out.reserve(count());
  for (std::size_t i = 0; i < count(); ++i) out.push_back(element(i));
  return out;
}

bool LevelSet::contains(const AlgebraicInt& a) const {
  return std::visit(
      [&](const auto& v) {
        using Rec = typename std::decay_t<decltype(v)>::value_type;
        const auto key = Ops<Rec>::from_mpz(a.coords());
        return key && std::binary_search(v.begin(), v.end(), *key);
      },
      store_);
}

LevelSet advance_level(const LevelSet& level, const MinPoly& mp, const EnumerationOptions& options) {
  const Companion c(mp);
  if (level.dim() != c.d) throw ValidationError("level set does not belong to this polynomial");
  LevelStore store = level.store();
  StoreStep s = step_store(store, c, options, true);
  if (!s.feasible || !s.next) {
    throw ResourceExhausted("level " + std::to_string(level.n() + 1) + " does not fit in the memory budget of " +
                            std::to_string(options.memory_budget) + " bytes");
  }
  return LevelSet(level.n() + 1, c.d, std::move(*s.next));
}

CountSequence count_sequence(const MinPoly& mp, std::size_t n_max, const EnumerationOptions& options) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  const Companion c(mp);
  CountSequence out;
  out.requested = n_max;
  LevelStore store = zero_store(c, options.force_generic);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const bool last = n == n_max;
    StoreStep s = step_store(store, c, options, !last);
    if (!s.feasible) {
      out.truncated = true;
      out.note = "memory budget reached before level " + std::to_string(n);
      break;
    }
    out.counts.push_back(s.count);
    if (last) break;
    if (!s.next) {
      out.truncated = true;
      out.note = "memory budget reached after counting level " + std::to_string(n);
      break;
    }
    store = std::move(*s.next);
  }
  return out;
}

std::vector<GrowthRow> growth_ratios(std::span<const std::uint64_t> counts, const MinPoly& mp) {
  if (counts.empty()) throw ValidationError("growth_ratios needs at least one count");
  const Bits prec = mp.precision();
  const Interval theta = mp.theta(prec);
  std::vector<GrowthRow> rows;
  Interval power(1L, prec);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const std::size_t n = i + 1;
    power = power * theta;
    const Interval ratio = Interval(mpz_class(static_cast<unsigned long>(counts[i])), prec) / power;
    const Interval root_n = sqrt(Interval(static_cast<long>(n), prec));
    rows.push_back({n, counts[i], ratio, ratio / root_n});
  }
  return rows;
}

}  // namespace perron
