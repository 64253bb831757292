#include "perron/min_poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>

#include "perron/errors.hpp"

namespace perron {

namespace {

constexpr Bits kHardPrecisionCap = Bits{1} << 22;

// Plain (non-certified) complex number used by the Aberth iteration.
struct CFloat {
  BigFloat re;
  BigFloat im;
  explicit CFloat(Bits prec) : re(prec), im(prec) {}
};

void cset(CFloat& out, const CFloat& a) {
  mpfr_set(out.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), a.im.get(), MPFR_RNDN);
}

void cmul(CFloat& out, const CFloat& a, const CFloat& b, BigFloat& t1, BigFloat& t2) {
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_fma(t2.get(), a.im.get(), b.re.get(), t2.get(), MPFR_RNDN);
  mpfr_set(out.re.get(), t1.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), t2.get(), MPFR_RNDN);
}

// out = a / b; returns false when b == 0.
bool cdiv(CFloat& out, const CFloat& a, const CFloat& b, BigFloat& t1, BigFloat& t2, BigFloat& t3) {
  mpfr_sqr(t3.get(), b.re.get(), MPFR_RNDN);
  mpfr_fma(t3.get(), b.im.get(), b.im.get(), t3.get(), MPFR_RNDN);
  if (mpfr_zero_p(t3.get())) return false;
  // (a.re + i a.im)(b.re - i b.im) / |b|^2
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_fma(t1.get(), a.im.get(), b.im.get(), t1.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(out.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t2.get(), t2.get(), out.re.get(), MPFR_RNDN);
  mpfr_div(out.re.get(), t1.get(), t3.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), t2.get(), t3.get(), MPFR_RNDN);
  return true;
}

mpfr_exp_t mag_exp(const CFloat& z) {
  constexpr mpfr_exp_t kZero = std::numeric_limits<mpfr_exp_t>::min() / 2;
  const mpfr_exp_t a = mpfr_zero_p(z.re.get()) ? kZero : mpfr_get_exp(z.re.get());
  const mpfr_exp_t b = mpfr_zero_p(z.im.get()) ? kZero : mpfr_get_exp(z.im.get());
  return std::max(a, b);
}

std::vector<std::complex<double>> initial_points(const IntPolynomial& p) {
  const std::size_t d = p.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  bool finite = true;
  for (std::size_t i = 0; i < d; ++i) {
    if (i + 1 < d) companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
    const double c = -p[i].get_d();
    finite = finite && std::isfinite(c);
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = c;
  }
  std::vector<std::complex<double>> out;
  if (finite) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() == Eigen::Success) {
      for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()[i]);
    }
  }
  const bool usable = out.size() == d && std::all_of(out.begin(), out.end(), [](const auto& z) {
                        return std::isfinite(z.real()) && std::isfinite(z.imag());
                      });
  if (!usable) {
    // Fallback: points on a circle of the Cauchy radius.
    out.clear();
    const double radius = std::min(1e300, 1.0 + p.height().get_d());
    for (std::size_t k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d) + 0.4;
      out.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
    }
  }
  // Aberth needs pairwise distinct starting points.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (out[i] == out[j]) out[i] += std::complex<double>(1e-3 * static_cast<double>(i + 1), 1e-3);
    }
  }
  return out;
}

void horner(const IntPolynomial& p, const CFloat& z, CFloat& val, CFloat& der, CFloat& tmp, BigFloat& t1,
            BigFloat& t2) {
  const std::size_t d = p.degree();
  mpfr_set_z(val.re.get(), p[d].get_mpz_t(), MPFR_RNDN);
  mpfr_set_zero(val.im.get(), 1);
  mpfr_set_zero(der.re.get(), 1);
  mpfr_set_zero(der.im.get(), 1);
  for (std::size_t k = d; k-- > 0;) {
    cmul(tmp, der, z, t1, t2);
    mpfr_add(der.re.get(), tmp.re.get(), val.re.get(), MPFR_RNDN);
    mpfr_add(der.im.get(), tmp.im.get(), val.im.get(), MPFR_RNDN);
    cmul(tmp, val, z, t1, t2);
    mpfr_add_z(val.re.get(), tmp.re.get(), p[k].get_mpz_t(), MPFR_RNDN);
    mpfr_set(val.im.get(), tmp.im.get(), MPFR_RNDN);
  }
}

// Simultaneous Aberth refinement in place at precision prec.
void aberth(const IntPolynomial& p, std::vector<CFloat>& z, Bits prec) {
  const std::size_t d = z.size();
  CFloat val(prec), der(prec), tmp(prec), w(prec), sum(prec), diff(prec), one(prec), delta(prec);
  BigFloat t1(prec), t2(prec), t3(prec);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  const int max_iter = 200 + static_cast<int>(std::log2(static_cast<double>(prec))) * 8;
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < d; ++i) {
      horner(p, z[i], val, der, tmp, t1, t2);
      if (mpfr_zero_p(val.re.get()) && mpfr_zero_p(val.im.get())) continue;
      if (!cdiv(w, val, der, t1, t2, t3)) {
        // Stationary point: nudge.
        mpfr_nextabove(z[i].re.get());
        mpfr_nextabove(z[i].im.get());
        converged = false;
        continue;
      }
      mpfr_set_zero(sum.re.get(), 1);
      mpfr_set_zero(sum.im.get(), 1);
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        mpfr_sub(diff.re.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
        mpfr_sub(diff.im.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
        if (!cdiv(tmp, one, diff, t1, t2, t3)) continue;
        mpfr_add(sum.re.get(), sum.re.get(), tmp.re.get(), MPFR_RNDN);
        mpfr_add(sum.im.get(), sum.im.get(), tmp.im.get(), MPFR_RNDN);
      }
      // delta = w / (1 - w * sum)
      cmul(tmp, w, sum, t1, t2);
      mpfr_ui_sub(tmp.re.get(), 1, tmp.re.get(), MPFR_RNDN);
      mpfr_neg(tmp.im.get(), tmp.im.get(), MPFR_RNDN);
      if (!cdiv(delta, w, tmp, t1, t2, t3)) cset(delta, w);
      mpfr_sub(z[i].re.get(), z[i].re.get(), delta.re.get(), MPFR_RNDN);
      mpfr_sub(z[i].im.get(), z[i].im.get(), delta.im.get(), MPFR_RNDN);
      const mpfr_exp_t scale = std::max<mpfr_exp_t>(1, mag_exp(z[i]));
      if (mag_exp(delta) > scale - static_cast<mpfr_exp_t>(prec) + 6) converged = false;
    }
    if (converged) break;
  }
}

ComplexInterval point_box(const CFloat& z) { return {Interval::point(z.re), Interval::point(z.im)}; }

// Radii of the Gerschgorin-type inclusion disks
//   r_i = d |p(z_i)| / prod_{j != i} |z_i - z_j|
// (Braess-Hadeler / Smith). Returns nullopt when a product is not bounded away
// from zero.
std::optional<std::vector<BigFloat>> inclusion_radii(const IntPolynomial& p, const std::vector<CFloat>& z,
                                                     Bits prec) {
  const std::size_t d = z.size();
  std::vector<BigFloat> radii;
  radii.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    const ComplexInterval zi = point_box(z[i]);
    ComplexInterval val(Interval(p[d], prec), Interval(0L, prec));
    for (std::size_t k = d; k-- > 0;) val = val * zi + ComplexInterval(Interval(p[k], prec));
    ComplexInterval prod(Interval(1L, prec), Interval(0L, prec));
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i) prod = prod * (zi - point_box(z[j]));
    }
    const BigFloat denom = prod.modulus().mig();
    if (mpfr_sgn(denom.get()) <= 0) return std::nullopt;
    BigFloat r(prec);
    mpfr_mul_ui(r.get(), val.modulus().hi().get(), static_cast<unsigned long>(d), MPFR_RNDU);
    mpfr_div(r.get(), r.get(), denom.get(), MPFR_RNDU);
    radii.push_back(std::move(r));
  }
  return radii;
}

// Certified lower bound on |a - b| for disk centers.
BigFloat center_distance_lower(const RootDisk& a, const RootDisk& b) {
  const ComplexInterval ca(Interval::point(a.re), Interval::point(a.im));
  const ComplexInterval cb(Interval::point(b.re), Interval::point(b.im));
  return (ca - cb).modulus().lo();
}

bool disks_disjoint(const RootDisk& a, const RootDisk& b, Bits prec) {
  BigFloat sum(prec);
  mpfr_add(sum.get(), a.radius.get(), b.radius.get(), MPFR_RNDU);
  return mpfr_greater_p(center_distance_lower(a, b).get(), sum.get()) != 0;
}

// Builds certified disks from approximations whose real/non-real structure has
// already been imposed (real centers have im == 0, conjugate pairs are exactly
// conjugate). Returns nullopt when certification fails at this precision.
std::optional<std::vector<RootDisk>> certify(const IntPolynomial& p, const std::vector<CFloat>& z,
                                             const std::vector<bool>& real, Bits prec) {
  auto radii = inclusion_radii(p, z, prec);
  if (!radii) return std::nullopt;
  std::vector<RootDisk> disks;
  disks.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    RootDisk disk{z[i].re, z[i].im, (*radii)[i], real[i]};
    if (!real[i]) {
      // A non-real disk must stay off the real axis.
      BigFloat im_abs(prec);
      mpfr_abs(im_abs.get(), disk.im.get(), MPFR_RNDD);
      if (!mpfr_greater_p(im_abs.get(), disk.radius.get())) return std::nullopt;
    }
    disks.push_back(std::move(disk));
  }
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!disks_disjoint(disks[i], disks[j], prec)) return std::nullopt;
    }
  }
  return disks;
}

std::vector<CFloat> to_cfloats(const std::vector<std::complex<double>>& pts, Bits prec) {
  std::vector<CFloat> z;
  z.reserve(pts.size());
  for (const auto& pt : pts) {
    CFloat c(prec);
    mpfr_set_d(c.re.get(), pt.real(), MPFR_RNDN);
    mpfr_set_d(c.im.get(), pt.imag(), MPFR_RNDN);
    z.push_back(std::move(c));
  }
  return z;
}

void raise_precision(std::vector<CFloat>& z, Bits prec) {
  for (auto& c : z) {
    mpfr_prec_round(c.re.get(), prec, MPFR_RNDN);
    mpfr_prec_round(c.im.get(), prec, MPFR_RNDN);
  }
}

// Decides a real/non-real structure for fresh approximations and imposes it.
// Returns false when the non-real approximations cannot be paired.
bool impose_structure(std::vector<CFloat>& z, std::vector<bool>& real, Bits prec) {
  const std::size_t d = z.size();
  real.assign(d, false);
  std::vector<std::size_t> upper;
  std::vector<std::size_t> lower;
  for (std::size_t i = 0; i < d; ++i) {
    const mpfr_exp_t scale = std::max<mpfr_exp_t>(1, mag_exp(z[i]));
    const bool tiny_im =
        mpfr_zero_p(z[i].im.get()) || mpfr_get_exp(z[i].im.get()) <= scale - static_cast<mpfr_exp_t>(prec / 2);
    if (tiny_im) {
      real[i] = true;
      mpfr_set_zero(z[i].im.get(), 1);
    } else if (mpfr_sgn(z[i].im.get()) > 0) {
      upper.push_back(i);
    } else {
      lower.push_back(i);
    }
  }
  if (upper.size() != lower.size()) return false;
  std::vector<bool> used(lower.size(), false);
  for (std::size_t u : upper) {
    const std::complex<double> target(z[u].re.to_double(), -z[u].im.to_double());
    std::size_t best = lower.size();
    double best_dist = 0;
    for (std::size_t k = 0; k < lower.size(); ++k) {
      if (used[k]) continue;
      const std::complex<double> cand(z[lower[k]].re.to_double(), z[lower[k]].im.to_double());
      const double dist = std::abs(cand - target);
      if (best == lower.size() || dist < best_dist) {
        best = k;
        best_dist = dist;
      }
    }
    used[best] = true;
    const std::size_t l = lower[best];
    mpfr_set(z[l].re.get(), z[u].re.get(), MPFR_RNDN);
    mpfr_neg(z[l].im.get(), z[u].im.get(), MPFR_RNDN);
  }
  return true;
}

// Orders certified disks into the theta / non-real / real labelling.
std::vector<RootDisk> label(std::vector<RootDisk> disks) {
  std::vector<RootDisk> reals;
  std::vector<RootDisk> upper;
  std::vector<RootDisk> lower;
  for (auto& disk : disks) {
    if (disk.is_real) {
      reals.push_back(std::move(disk));
    } else if (mpfr_sgn(disk.im.get()) > 0) {
      upper.push_back(std::move(disk));
    } else {
      lower.push_back(std::move(disk));
    }
  }
  // Disjoint real segments: center order is the certified value order.
  std::sort(reals.begin(), reals.end(), [](const RootDisk& a, const RootDisk& b) { return b.re < a.re; });
  std::sort(upper.begin(), upper.end(), [](const RootDisk& a, const RootDisk& b) {
    const int c = cmp(a.re, b.re);
    if (c != 0) return c > 0;
    return b.im < a.im;
  });
  std::vector<RootDisk> out;
  out.reserve(disks.size());
  if (!reals.empty()) out.push_back(reals.front());
  for (auto& u : upper) {
    auto it = std::find_if(lower.begin(), lower.end(), [&](const RootDisk& l) {
      return mpfr_equal_p(l.re.get(), u.re.get()) && mpfr_cmpabs(l.im.get(), u.im.get()) == 0;
    });
    out.push_back(u);
    out.push_back(*it);
    lower.erase(it);
  }
  for (std::size_t i = 1; i < reals.size(); ++i) out.push_back(reals[i]);
  return out;
}

// Re-isolates a labelled set at higher precision keeping the labelling.
std::optional<std::vector<RootDisk>> refine_labelled(const IntPolynomial& p, const std::vector<RootDisk>& old,
                                                     Bits prec) {
  const std::size_t d = old.size();
  std::vector<CFloat> z;
  std::vector<bool> real(d);
  for (std::size_t i = 0; i < d; ++i) {
    CFloat c(prec);
    mpfr_set(c.re.get(), old[i].re.get(), MPFR_RNDN);
    mpfr_set(c.im.get(), old[i].im.get(), MPFR_RNDN);
    z.push_back(std::move(c));
    real[i] = old[i].is_real;
  }
  aberth(p, z, prec);
  for (std::size_t i = 0; i < d; ++i) {
    if (real[i]) {
      mpfr_set_zero(z[i].im.get(), 1);
    } else if (mpfr_sgn(old[i].im.get()) < 0) {
      // Partner precedes in the labelling.
      mpfr_set(z[i].re.get(), z[i - 1].re.get(), MPFR_RNDN);
      mpfr_neg(z[i].im.get(), z[i - 1].im.get(), MPFR_RNDN);
    }
  }
  auto disks = certify(p, z, real, prec);
  if (!disks) return std::nullopt;
  // New disk i must miss every old disk except i, so it holds the same root.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (k != i && !disks_disjoint((*disks)[i], old[k], prec)) return std::nullopt;
    }
  }
  return disks;
}

}  // namespace

ComplexInterval RootDisk::box() const {
  const Bits prec = re.prec();
  if (is_real) return ComplexInterval(Interval::ball(re, radius, prec));
  return {Interval::ball(re, radius, prec), Interval::ball(im, radius, prec)};
}

Interval RootDisk::real_interval() const { return Interval::ball(re, radius, re.prec()); }

ConjugateSet::ConjugateSet(Bits precision, std::vector<RootDisk> roots)
    : precision_(precision), roots_(std::move(roots)) {}

std::vector<std::size_t> ConjugateSet::real_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= roots_.size(); ++j) {
    if (roots_[j - 1].is_real) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> ConjugateSet::nonreal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= roots_.size(); ++j) {
    if (!roots_[j - 1].is_real) out.push_back(j);
  }
  return out;
}

std::size_t ConjugateSet::partner(std::size_t j) const {
  if (root(j).is_real) return j;
  return (j % 2 == 0) ? j + 1 : j - 1;
}

std::vector<RootDisk> isolate_roots(const IntPolynomial& p, Bits precision, Bits precision_cap, Bits* achieved) {
  if (p.degree() < 1) throw ValidationError("polynomial must have degree at least 1");
  if (!p.is_monic()) throw ValidationError("polynomial is not monic");
  std::vector<CFloat> z = to_cfloats(initial_points(p), precision);
  for (Bits prec = precision; prec <= precision_cap; prec *= 2) {
    raise_precision(z, prec);
    aberth(p, z, prec);
    std::vector<CFloat> trial;
    for (const auto& c : z) {
      CFloat t(prec);
      cset(t, c);
      trial.push_back(std::move(t));
    }
    std::vector<bool> real;
    if (!impose_structure(trial, real, prec)) continue;
    if (auto disks = certify(p, trial, real, prec)) {
      if (achieved) *achieved = prec;
      return std::move(*disks);
    }
  }
  throw ResourceExhausted("root isolation failed below the precision cap of " + std::to_string(precision_cap) +
                          " bits");
}

struct MinPoly::Impl {
  explicit Impl(IntPolynomial p) : poly(std::move(p)) {}
  IntPolynomial poly;
  std::int64_t floor_theta = 0;
  Bits precision = 0;
  Bits precision_cap = 0;
  std::shared_ptr<const ConjugateSet> base;
  mutable std::mutex mutex;
  mutable std::map<Bits, std::shared_ptr<const ConjugateSet>> refined;
};

const IntPolynomial& MinPoly::poly() const { return impl_->poly; }
std::size_t MinPoly::degree() const { return impl_->poly.degree(); }
std::int64_t MinPoly::floor_theta() const { return impl_->floor_theta; }
Bits MinPoly::precision() const { return impl_->precision; }
Bits MinPoly::precision_cap() const { return impl_->precision_cap; }
const ConjugateSet& MinPoly::conjugates() const { return *impl_->base; }

std::shared_ptr<const ConjugateSet> MinPoly::conjugates_at(Bits bits) const {
  if (bits <= impl_->base->precision()) return impl_->base;
  std::lock_guard<std::mutex> lock(impl_->mutex);
  auto it = impl_->refined.lower_bound(bits);
  if (it != impl_->refined.end()) return it->second;
  std::shared_ptr<const ConjugateSet> from = impl_->base;
  if (!impl_->refined.empty()) from = impl_->refined.rbegin()->second;
  Bits prec = from->precision();
  while (prec < bits) prec *= 2;
  for (; prec <= kHardPrecisionCap; prec *= 2) {
    if (auto disks = refine_labelled(impl_->poly, from->roots(), prec)) {
      auto set = std::make_shared<const ConjugateSet>(prec, std::move(*disks));
      impl_->refined.emplace(prec, set);
      return set;
    }
  }
  throw ResourceExhausted("conjugate refinement exceeded the hard precision limit");
}

Interval MinPoly::theta(Bits bits) const { return conjugates_at(bits)->root(1).real_interval(); }

std::vector<mpz_class> MinPoly::theta_coords() const {
  const std::size_t d = degree();
  if (d == 1) return {mpz_class(-impl_->poly[0])};
  std::vector<mpz_class> out(d, 0);
  out[1] = 1;
  return out;
}

MinPoly make_min_poly(const IntPolynomial& p, MinPolyOptions options) {
  if (p.degree() < 1) throw ValidationError("polynomial must have degree at least 1");
  if (!p.is_monic()) throw ValidationError("polynomial is not monic");
  if (options.precision < 16) throw ValidationError("precision must be at least 16 bits");
  if (options.precision_cap < options.precision) options.precision_cap = options.precision;
  if (!is_squarefree(p)) throw ValidationError("polynomial is not squarefree");

  Bits achieved = options.precision;
  std::vector<RootDisk> disks = isolate_roots(p, options.precision, options.precision_cap, &achieved);
  const std::size_t d = p.degree();

  if (d > 1) {
    // Monic: rational roots are integers, and they sit inside real disks.
    for (const auto& disk : disks) {
      if (!disk.is_real) continue;
      const Interval seg = disk.real_interval();
      const mpz_class lo = seg.floor_lo();
      const mpz_class hi = seg.floor_hi() + 1;
      if (hi - lo > 1000) throw ResourceExhausted("real root disk too wide for the rational root check");
      for (mpz_class k = lo; k <= hi; ++k) {
        if (p.eval(k) == 0) throw ValidationError("polynomial has the rational root " + k.get_str());
      }
    }
  }

  const bool any_real = std::any_of(disks.begin(), disks.end(), [](const RootDisk& r) { return r.is_real; });
  if (!any_real) throw ValidationError("dominant root is non-real (no real root)");

  auto impl = std::make_shared<MinPoly::Impl>(p);
  impl->precision = achieved;
  impl->precision_cap = options.precision_cap;
  impl->base = std::make_shared<const ConjugateSet>(achieved, label(std::move(disks)));
  MinPoly mp(impl);

  if (d == 1) {
    const mpz_class theta = -p[0];
    if (theta <= 1) throw ValidationError("dominant root " + theta.get_str() + " is not > 1");
    if (!theta.fits_slong_p() || theta > (mpz_class(1) << 31))
      throw ValidationError("floor(theta) is too large for digit enumeration");
    impl->floor_theta = theta.get_si();
    return mp;
  }

  for (Bits bits = achieved;; bits *= 2) {
    const Interval theta = mp.theta(bits);
    if (mpfr_cmp_ui(theta.hi().get(), 1) <= 0) throw ValidationError("dominant real root is not > 1");
    if (mpfr_cmp_ui(theta.lo().get(), 1) <= 0) continue;  // theta != 1 (no rational roots); refine
    const mpz_class lo = theta.floor_lo();
    if (lo != theta.floor_hi()) continue;  // theta is irrational; refine until no integer is enclosed
    if (lo > (mpz_class(1) << 31)) throw ValidationError("floor(theta) is too large for digit enumeration");
    impl->floor_theta = lo.get_si();
    return mp;
  }
}

const char* to_string(PerronVerdict v) {
  switch (v) {
    case PerronVerdict::perron:
      return "true";
    case PerronVerdict::not_perron:
      return "false";
    case PerronVerdict::undecided:
      return "undecided";
  }
  return "undecided";
}

PerronVerdict is_perron(const MinPoly& mp) {
  const std::size_t d = mp.degree();
  if (d == 1) return PerronVerdict::perron;
  // -theta is a conjugate exactly when p(-x) = +-p(x) (p minimal).
  const IntPolynomial reflected = mp.poly().reflect();
  std::vector<mpz_class> negated = mp.poly().coeffs();
  for (auto& c : negated) c = -c;
  if (reflected == mp.poly() || reflected.coeffs() == negated) return PerronVerdict::not_perron;

  for (Bits bits = mp.precision(); bits <= mp.precision_cap(); bits *= 2) {
    const auto set = mp.conjugates_at(bits);
    const Interval theta = set->root(1).real_interval();
    bool decided = true;
    for (std::size_t j = 2; j <= d; ++j) {
      const Interval modulus = set->enclosure(j).modulus();
      if (certainly_less(modulus, theta)) continue;
      if (certainly_less(theta, modulus)) return PerronVerdict::not_perron;
      decided = false;
    }
    if (decided) return PerronVerdict::perron;
  }
  return PerronVerdict::undecided;
}

}  // namespace perron
