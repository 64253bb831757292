#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "perron/int_poly.hpp"
#include "perron/interval.hpp"

namespace perron {

/// Certified isolating disk for one root: the disk of the given radius around
/// (re, im) contains exactly one root, and no other disk of the same set meets it.
/// Real roots have im == 0 and are enclosed by the real segment [re - r, re + r].
struct RootDisk {
  BigFloat re;
  BigFloat im;
  BigFloat radius;
  bool is_real = false;

  /// Axis-aligned box containing the disk (degenerate imaginary part for real roots).
  ComplexInterval box() const;
  /// Real enclosure; only meaningful for real roots.
  Interval real_interval() const;
};

/// All d roots of a MinPoly, labelled as in the usual Perron setting:
/// index 1 is theta itself, indices 2..s are the non-real conjugates (each
/// conjugate pair adjacent, positive imaginary part first) and s+1..d are the
/// remaining real conjugates in decreasing order. Conjugate indices are 1-based
/// throughout the library.
class ConjugateSet {
 public:
  ConjugateSet(Bits precision, std::vector<RootDisk> roots);

  Bits precision() const { return precision_; }
  std::size_t size() const { return roots_.size(); }
  const RootDisk& root(std::size_t j) const { return roots_.at(j - 1); }
  const std::vector<RootDisk>& roots() const { return roots_; }
  ComplexInterval enclosure(std::size_t j) const { return root(j).box(); }

  std::size_t dominant_index() const { return 1; }
  std::vector<std::size_t> real_indices() const;
  std::vector<std::size_t> nonreal_indices() const;
  /// theta_2..theta_s are the non-real conjugates.
  std::size_t s() const { return 1 + nonreal_indices().size(); }
  /// Index of the complex-conjugate partner (j itself for real roots).
  std::size_t partner(std::size_t j) const;

 private:
  Bits precision_;
  std::vector<RootDisk> roots_;
};

/// Isolates all roots of a monic squarefree polynomial into certified disjoint
/// disks, doubling the working precision from `precision` until certification
/// succeeds. Throws ResourceExhausted above `precision_cap`.
/// The result is not yet labelled; roots come back in an internal order.
std::vector<RootDisk> isolate_roots(const IntPolynomial& p, Bits precision, Bits precision_cap,
                                    Bits* achieved = nullptr);

struct MinPolyOptions {
  Bits precision = 256;
  Bits precision_cap = 4096;
};

/// A monic integer polynomial together with its certified conjugate data.
///
/// The polynomial is assumed to be the minimal polynomial of its largest real
/// root theta. Construction checks monic, squarefree and (for degree > 1) the
/// absence of rational roots, which rules out the common reducible inputs;
/// full irreducibility is not verified. Exactness of "value zero iff zero
/// coordinate vector" in Z[theta] relies on that assumption.
///
/// Values are immutable and cheap to copy; refined conjugate sets are cached
/// behind a mutex and shared between copies.
class MinPoly {
 public:
  const IntPolynomial& poly() const;
  std::size_t degree() const;
  /// floor(theta).
  std::int64_t floor_theta() const;
  Bits precision() const;
  Bits precision_cap() const;

  /// Conjugates at the construction precision.
  const ConjugateSet& conjugates() const;
  /// Conjugates isolated at working precision >= bits, same labelling.
  std::shared_ptr<const ConjugateSet> conjugates_at(Bits bits) const;
  /// Real enclosure of theta at working precision >= bits.
  Interval theta(Bits bits) const;
  Interval theta() const { return theta(precision()); }

  /// Coefficients of theta in the power basis (0,1,0,...), or (theta) when d == 1.
  std::vector<mpz_class> theta_coords() const;

  friend MinPoly make_min_poly(const IntPolynomial& p, MinPolyOptions options);

 private:
  struct Impl;
  explicit MinPoly(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

/// Validates p and builds its MinPoly. Throws ValidationError when p is not
/// monic, not squarefree, has a rational root (degree > 1), or has no real
/// root > 1 (reported as a non-real or too small dominant root).
MinPoly make_min_poly(const IntPolynomial& p, MinPolyOptions options = {});

enum class PerronVerdict { perron, not_perron, undecided };

const char* to_string(PerronVerdict v);

/// theta > 1 and |theta_j| < theta for every other conjugate, decided with
/// certified enclosures refined up to the MinPoly's precision cap. Exact ties
/// theta_j = -theta are detected algebraically (p(-x) = +-p(x)); other
/// unresolved near-ties return undecided.
PerronVerdict is_perron(const MinPoly& mp);

}  // namespace perron
