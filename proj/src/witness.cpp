#include <algorithm>
#include <unordered_map>

#include "perron/digit_sets.hpp"
#include "perron/errors.hpp"

namespace perron {

bool verify_witness(const CollisionWitness& w, const MinPoly& mp) {
  if (w.coeffs.empty()) return false;
  const long m = mp.floor_theta();
  if (std::all_of(w.coeffs.begin(), w.coeffs.end(), [](long c) { return c == 0; })) return false;
  if (std::any_of(w.coeffs.begin(), w.coeffs.end(), [m](long c) { return c < -m || c > m; })) return false;
  return digit_value(mp, w.coeffs).is_zero();
}

namespace {

using State = std::vector<std::int64_t>;

struct StateHash {
  std::size_t operator()(const State& s) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (std::int64_t x : s) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 0x100000001B3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::int64_t> small_coeffs(const MinPoly& mp) {
  std::vector<std::int64_t> p;
  for (std::size_t i = 0; i < mp.degree(); ++i) {
    const mpz_class& c = mp.poly()[i];
    if (!c.fits_slong_p()) throw CoordinateOverflow();
    p.push_back(c.get_si());
  }
  return p;
}

// theta * v + c, checked.
State step_state(const State& v, std::int64_t c, const std::vector<std::int64_t>& p) {
  const std::size_t d = v.size();
  State out(d);
  const std::int64_t top = v[d - 1];
  for (std::size_t i = 0; i < d; ++i) {
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(top, p[i], &prod)) throw CoordinateOverflow();
    if (__builtin_sub_overflow(i == 0 ? 0 : v[i - 1], prod, &out[i])) throw CoordinateOverflow();
  }
  if (__builtin_add_overflow(out[0], c, &out[0])) throw CoordinateOverflow();
  return out;
}

// w with theta * w = u, when w has integer coordinates.
std::optional<State> divide_by_theta(const State& u, const std::vector<std::int64_t>& p) {
  const std::size_t d = u.size();
  if (u[0] % p[0] != 0) return std::nullopt;
  State w(d);
  w[d - 1] = -(u[0] / p[0]);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    std::int64_t prod = 0;
    if (__builtin_mul_overflow(p[i + 1], w[d - 1], &prod)) return std::nullopt;
    if (__builtin_add_overflow(u[i + 1], prod, &w[i])) return std::nullopt;
  }
  return w;
}

enum class EmbeddingKind { expanding, contracting, near_unit };

struct Embedding {
  std::size_t index;
  EmbeddingKind kind;
  ComplexInterval root;
  BigFloat bound;  // modulus cap; for near-unit embeddings, the per-digit factor m
  BigFloat growth; // max(1, |root|) rounded up, used by near-unit embeddings
};

std::vector<Embedding> classify_embeddings(const MinPoly& mp, double tolerance, Bits prec) {
  const auto set = mp.conjugates_at(prec);
  const long m = mp.floor_theta();
  BigFloat eps(prec);
  mpfr_set_d(eps.get(), tolerance, MPFR_RNDU);
  BigFloat lo1(prec), hi1(prec);
  mpfr_ui_sub(lo1.get(), 1, eps.get(), MPFR_RNDD);
  mpfr_add_ui(hi1.get(), eps.get(), 1, MPFR_RNDU);
  const Interval annulus(lo1, hi1);
  const Interval m_iv(m, prec);
  const Interval one(1L, prec);

  std::vector<Embedding> out;
  for (std::size_t j = 1; j <= set->size(); ++j) {
    // One member of each conjugate pair carries the same modulus information.
    if (!set->root(j).is_real && set->partner(j) < j) continue;
    const ComplexInterval root = set->enclosure(j);
    const Interval modulus = root.modulus();
    const bool meets_annulus = !(certainly_less(modulus, annulus) || certainly_less(annulus, modulus));
    BigFloat growth = modulus.hi();
    if (mpfr_cmp_ui(growth.get(), 1) < 0) mpfr_set_ui(growth.get(), 1, MPFR_RNDU);
    if (meets_annulus) {
      out.push_back({j, EmbeddingKind::near_unit, root, m_iv.hi(), growth});
    } else if (certainly_less(one, modulus)) {
      out.push_back({j, EmbeddingKind::expanding, root, (m_iv / (modulus - one)).hi(), growth});
    } else {
      out.push_back({j, EmbeddingKind::contracting, root, (m_iv / (one - modulus)).hi(), growth});
    }
  }
  return out;
}

// False when some certified embedding bound rules out reaching zero.
bool within_bounds(const State& v, std::size_t depth, const std::vector<Embedding>& embeddings, Bits prec) {
  std::vector<mpz_class> coords;
  coords.reserve(v.size());
  for (std::int64_t x : v) coords.emplace_back(static_cast<long>(x));
  for (const auto& e : embeddings) {
    const BigFloat low = evaluate(coords, e.root).modulus().mig();
    if (e.kind == EmbeddingKind::near_unit) {
      // V is a sum of `depth` terms c * root^i with i < depth.
      BigFloat cap(prec);
      mpfr_pow_ui(cap.get(), e.growth.get(), static_cast<unsigned long>(depth - 1), MPFR_RNDU);
      mpfr_mul(cap.get(), cap.get(), e.bound.get(), MPFR_RNDU);
      mpfr_mul_ui(cap.get(), cap.get(), static_cast<unsigned long>(depth), MPFR_RNDU);
      if (mpfr_greater_p(low.get(), cap.get())) return false;
    } else if (mpfr_greater_p(low.get(), e.bound.get())) {
      return false;
    }
  }
  return true;
}

}  // namespace

WitnessResult find_height_witness(const MinPoly& mp, const WitnessOptions& options) {
  WitnessResult result;
  const long m = mp.floor_theta();
  if (m < 1) throw ValidationError("witness search needs floor(theta) >= 1");
  const std::size_t d = mp.degree();
  const Bits prec = std::max<Bits>(mp.precision(), 128);

  std::vector<std::int64_t> p;
  try {
    p = small_coeffs(mp);
  } catch (const CoordinateOverflow&) {
    result.failure = "polynomial coefficients exceed 64 bits";
    return result;
  }
  const auto embeddings = classify_embeddings(mp, options.unit_tolerance, prec);
  for (const auto& e : embeddings) {
    switch (e.kind) {
      case EmbeddingKind::expanding:
        ++result.stats.expanding;
        break;
      case EmbeddingKind::contracting:
        ++result.stats.contracting;
        break;
      case EmbeddingKind::near_unit:
        ++result.stats.near_unit;
        break;
    }
  }

  // depth = number of coefficients consumed; seeds have depth 1.
  std::unordered_map<State, std::size_t, StateHash> depth_of;
  std::vector<State> layer;
  for (long c = 1; c <= m; ++c) {
    State seed(d, 0);
    seed[0] = c;
    if (!within_bounds(seed, 1, embeddings, prec)) {
      ++result.stats.pruned;
      continue;
    }
    depth_of.emplace(seed, 1);
    layer.push_back(std::move(seed));
  }

  std::size_t goal_depth = 0;
  try {
    for (std::size_t depth = 1; depth < options.max_depth && !layer.empty(); ++depth) {
      result.stats.depth = depth;
      result.stats.widest_layer = std::max(result.stats.widest_layer, layer.size());
      std::vector<State> next;
      for (const State& v : layer) {
        for (long c = -m; c <= m; ++c) {
          State w = step_state(v, c, p);
          if (std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; })) {
            goal_depth = depth + 1;
            continue;
          }
          if (depth_of.count(w)) continue;
          if (!within_bounds(w, depth + 1, embeddings, prec)) {
            ++result.stats.pruned;
            continue;
          }
          depth_of.emplace(w, depth + 1);
          next.push_back(std::move(w));
        }
      }
      if (goal_depth) break;
      if (depth_of.size() > options.state_cap) {
        result.stats.states = depth_of.size();
        result.failure = "state cap of " + std::to_string(options.state_cap) + " exhausted at depth " +
                         std::to_string(depth + 1);
        return result;
      }
      layer = std::move(next);
    }
  } catch (const CoordinateOverflow&) {
    result.stats.states = depth_of.size();
    result.failure = "state coordinates exceed 64 bits";
    return result;
  }
  result.stats.states = depth_of.size();
  if (!goal_depth) {
    result.failure = layer.empty() ? "search space exhausted below the depth cap"
                                   : "max depth of " + std::to_string(options.max_depth) + " reached";
    return result;
  }

  // Walk back from 0, taking the smallest admissible coefficient at each step:
  // c_1 is the last transition, so this yields the lexicographically smallest
  // (c_1, ..., c_n) among the shortest witnesses.
  CollisionWitness w;
  State v(d, 0);
  for (std::size_t depth = goal_depth - 1; depth >= 1; --depth) {
    bool found = false;
    for (long c = -m; c <= m && !found; ++c) {
      State u = v;
      u[0] -= c;
      const auto prev = divide_by_theta(u, p);
      if (!prev) continue;
      const auto it = depth_of.find(*prev);
      if (it == depth_of.end() || it->second != depth) continue;
      w.coeffs.push_back(c);
      v = *prev;
      found = true;
    }
    if (!found) throw std::logic_error("witness reconstruction lost its path");
    if (depth == 1) break;
  }
  w.coeffs.push_back(static_cast<long>(v[0]));
  if (!verify_witness(w, mp)) throw std::logic_error("reconstructed witness failed verification");
  result.witness = std::move(w);
  return result;
}

}  // namespace perron
