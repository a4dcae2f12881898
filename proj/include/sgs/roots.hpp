#pragma once

#include <vector>

#include "sgs/polynomial.hpp"

namespace sgs {

/// p / gcd(p, p'), made monic.
RationalPoly squarefree_part(const RationalPoly& p);

/// Canonical Sturm chain p, p', -rem(...), ... of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPoly& squarefree);

  /// Sign changes at x, zeros skipped.
  int variations(const Rational& x) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;

  /// Distinct roots in (a, b].
  int count_half_open(const Rational& a, const Rational& b) const;
  int count_real() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

  const std::vector<RationalPoly>& chain() const noexcept { return chain_; }

 private:
  std::vector<RationalPoly> chain_;
};

int count_distinct_real_roots(const RationalPoly& p);

/// Distinct real roots in the closed interval [a, b].
int count_roots_in(const RationalPoly& p, const Rational& a, const Rational& b);

/// Distinct real roots outside [a, b]. Throws BadParams unless a < b.
int count_roots_outside(const CharPolyInt& p, const Rational& a, const Rational& b);

/// deg p - deg gcd(p, p'): the number of distinct (complex) roots.
int distinct_root_count(const CharPolyInt& p);

/// A real algebraic number: the unique root of a squarefree rational
/// polynomial inside the half-open interval (lo, hi].
class RealAlgebraic {
 public:
  static RealAlgebraic from_rational(const Rational& q);
  /// Non-negative square root of a non-negative rational.
  static RealAlgebraic sqrt_of(const Rational& r);
  /// Root of p closest to `estimate`; p need not be squarefree.
  static RealAlgebraic isolate(const RationalPoly& p, double estimate);

  const RationalPoly& polynomial() const noexcept { return poly_; }
  const Rational& lower() const noexcept { return lo_; }
  const Rational& upper() const noexcept { return hi_; }
  double approx() const;

  /// Exact sign of q at this number.
  int sign_of(const RationalPoly& q) const;

  /// Shrinks the isolating interval below the given width.
  void refine(const Rational& width) const;

 private:
  RealAlgebraic(RationalPoly p, Rational lo, Rational hi)
      : poly_(std::move(p)), sturm_(poly_), lo_(std::move(lo)), hi_(std::move(hi)) {}

  void bisect() const;

  RationalPoly poly_;
  SturmSequence sturm_;
  mutable Rational lo_;
  mutable Rational hi_;
};

/// Distinct roots of p strictly greater than alpha.
int count_roots_above(const RationalPoly& p, const RealAlgebraic& alpha);

/// Distinct roots x of p with |x| > alpha (alpha >= 0).
int count_roots_beyond(const RationalPoly& p, const RealAlgebraic& alpha);

/// Distinct roots x of p with |x| >= alpha (alpha >= 0).
int count_roots_at_or_beyond(const RationalPoly& p, const RealAlgebraic& alpha);

}  // namespace sgs
