#include "sgs/roots.hpp"

#include <boost/multiprecision/number.hpp>
#include <cmath>
#include <utility>

namespace sgs {

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

RationalPoly monic(const RationalPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

// Positive rescaling keeps every Sturm sign intact and tames coefficient growth.
RationalPoly normalized_positive(const RationalPoly& p) {
  if (p.is_zero()) return p;
  Rational lead = p.leading();
  if (lead < 0) lead = -lead;
  return p * (Rational(1) / lead);
}

Rational cauchy_bound(const RationalPoly& p) {
  Rational bound = 0;
  const Rational lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = p.coeff(i) / lead;
    if (r < 0) r = -r;
    if (r > bound) bound = r;
  }
  return bound + 1;
}

}  // namespace

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return monic(p);
  const RationalPoly g = gcd(p, p.derivative());
  return monic(divmod(p, g).first);
}

SturmSequence::SturmSequence(const RationalPoly& squarefree) {
  if (squarefree.is_zero()) return;
  chain_.push_back(normalized_positive(squarefree));
  RationalPoly next = normalized_positive(squarefree.derivative());
  while (!next.is_zero()) {
    chain_.push_back(next);
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    next = normalized_positive(-divmod(a, b).second);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain_) {
    const int sg = sign_of(s.evaluate(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::variations_at_pos_infinity() const {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain_) {
    const int sg = sign_of(s.leading());
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::variations_at_neg_infinity() const {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain_) {
    int sg = sign_of(s.leading());
    if (s.degree() % 2 != 0) sg = -sg;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

int count_distinct_real_roots(const RationalPoly& p) {
  const RationalPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  return SturmSequence(q).count_real();
}

int count_roots_in(const RationalPoly& p, const Rational& a, const Rational& b) {
  const RationalPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  const SturmSequence s(q);
  return s.count_half_open(a, b) + (q.evaluate(a) == 0 ? 1 : 0);
}

int count_roots_outside(const CharPolyInt& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(Errc::BadParams, "count_roots_outside needs a < b");
  const auto rp = polynomial_cast<Rational>(p);
  return count_distinct_real_roots(rp) - count_roots_in(rp, a, b);
}

int distinct_root_count(const CharPolyInt& p) {
  if (p.degree() <= 0) return 0;
  const auto rp = polynomial_cast<Rational>(p);
  return p.degree() - gcd(rp, rp.derivative()).degree();
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& q) {
  return RealAlgebraic(RationalPoly{Rational(-q), Rational(1)}, q - 1, q);
}

RealAlgebraic RealAlgebraic::sqrt_of(const Rational& r) {
  if (r < 0) throw Error(Errc::BadParams, "square root of a negative rational");
  if (r == 0) return from_rational(0);
  return RealAlgebraic(RationalPoly{Rational(-r), Rational(0), Rational(1)}, Rational(0),
                       r > 1 ? r : Rational(1));
}

RealAlgebraic RealAlgebraic::isolate(const RationalPoly& p, double estimate) {
  const RationalPoly q = squarefree_part(p);
  if (q.degree() < 1) throw Error(Errc::BadParams, "polynomial has no roots to isolate");
  const SturmSequence s(q);
  if (s.count_real() == 0) throw Error(Errc::BadParams, "polynomial has no real roots");

  // Split (-B, B] until every piece holds at most one root.
  const Rational bound = cauchy_bound(q);
  std::vector<std::pair<Rational, Rational>> pending{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!pending.empty()) {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const int c = s.count_half_open(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    pending.emplace_back(lo, mid);
    pending.emplace_back(mid, hi);
  }

  const Rational target(estimate);
  std::size_t best = 0;
  Rational best_dist = -1;
  for (std::size_t i = 0; i < isolated.size(); ++i) {
    RealAlgebraic candidate(q, isolated[i].first, isolated[i].second);
    candidate.refine(Rational(1, 1LL << 40));
    Rational d = (candidate.lo_ + candidate.hi_) / 2 - target;
    if (d < 0) d = -d;
    if (best_dist < 0 || d < best_dist) {
      best_dist = d;
      best = i;
    }
    isolated[i] = {candidate.lo_, candidate.hi_};
  }
  return RealAlgebraic(q, isolated[best].first, isolated[best].second);
}

double RealAlgebraic::approx() const {
  refine(Rational(1, 1LL << 60));
  return static_cast<double>((lo_ + hi_) / 2);
}

void RealAlgebraic::bisect() const {
  const Rational mid = (lo_ + hi_) / 2;
  if (sturm_.count_half_open(lo_, mid) == 1) {
    hi_ = mid;
  } else {
    lo_ = mid;
  }
}

void RealAlgebraic::refine(const Rational& width) const {
  if (poly_.degree() == 1) {
    // Exact rational: collapse onto the root.
    const Rational root = -poly_.coeff(0) / poly_.coeff(1);
    hi_ = root;
    lo_ = root - width / 2;
    return;
  }
  while (hi_ - lo_ >= width) bisect();
}

int RealAlgebraic::sign_of(const RationalPoly& q) const {
  if (q.is_zero()) return 0;
  if (q.degree() == 0) return sgs::sign_of(q.leading());
  const RationalPoly g = gcd(q, poly_);
  if (g.degree() >= 1) {
    const RationalPoly gs = squarefree_part(g);
    if (SturmSequence(gs).count_half_open(lo_, hi_) > 0) return 0;
  }
  const SturmSequence qs(squarefree_part(q));
  while (qs.count_half_open(lo_, hi_) > 0) bisect();
  return sgs::sign_of(q.evaluate(hi_));
}

int count_roots_above(const RationalPoly& p, const RealAlgebraic& alpha) {
  const RationalPoly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  const SturmSequence s(q);
  int changes = 0;
  int last = 0;
  for (const auto& link : s.chain()) {
    const int sg = alpha.sign_of(link);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes - s.variations_at_pos_infinity();
}

int count_roots_beyond(const RationalPoly& p, const RealAlgebraic& alpha) {
  return count_roots_above(p, alpha) + count_roots_above(p.reflected(), alpha);
}

int count_roots_at_or_beyond(const RationalPoly& p, const RealAlgebraic& alpha) {
  int count = count_roots_beyond(p, alpha);
  const bool alpha_is_zero = alpha.sign_of(RationalPoly::x()) == 0;
  if (alpha.sign_of(p) == 0) ++count;
  if (!alpha_is_zero && alpha.sign_of(p.reflected()) == 0) ++count;
  return count;
}

}  // namespace sgs
