#include <algorithm>
#include <numeric>

#include "perron/digit_sets.hpp"
#include "perron/errors.hpp"

namespace perron {

namespace {

// Enclosure of a nonzero element that is known to exclude zero.
Interval signed_enclosure(const MinPoly& mp, const AlgebraicInt& a) {
  for (Bits bits = mp.precision();; bits *= 2) {
    Interval v = evaluate(a.coords(), mp.theta(bits));
    if (v.certain_sign() != 0) return v;
  }
}

}  // namespace

GapResult min_gap(const MinPoly& mp, std::size_t n, const EnumerationOptions& options) {
  if (n < 1) throw ValidationError("min_gap needs n >= 1");
  LevelSet level = LevelSet::initial(mp, options);
  while (level.n() < n) level = advance_level(level, mp, options);
  const std::vector<AlgebraicInt> elems = level.elements();
  if (elems.size() < 2) throw ValidationError("D_n has fewer than two elements");

  const Bits prec = mp.precision();
  const Interval theta = mp.theta(prec);
  std::vector<BigFloat> mids;
  mids.reserve(elems.size());
  for (const auto& e : elems) mids.push_back(evaluate(e.coords(), theta).mid());

  std::vector<std::size_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int c = cmp(mids[a], mids[b]);
    return c != 0 ? c < 0 : elems[a] < elems[b];
  });

  // Midpoint order can only be wrong between near-equal values; fall back to
  // the exact comparison when any adjacent pair disagrees.
  bool ordered = true;
  for (std::size_t i = 0; i + 1 < order.size() && ordered; ++i) {
    ordered = sign_of(mp, sub(elems[order[i + 1]], elems[order[i]])) > 0;
  }
  if (!ordered) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sign_of(mp, sub(elems[a], elems[b])) < 0;
    });
  }

  std::optional<Interval> gap;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const Interval diff = signed_enclosure(mp, sub(elems[order[i + 1]], elems[order[i]]));
    gap = gap ? min(*gap, diff) : diff;
  }
  const Interval normalized = *gap * pow(mp.theta(gap->prec()), static_cast<unsigned long>(n));
  return {n, elems.size(), *gap, normalized};
}

}  // namespace perron
