#pragma once

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgs/error.hpp"
#include "sgs/types.hpp"

namespace sgs {

/// Dense univariate polynomial, coefficients stored by ascending degree.
/// Trailing zeros are trimmed, so the zero polynomial has degree -1.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending) : c_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<Scalar> ascending) : c_(ascending) { trim(); }

  static Polynomial constant(const Scalar& value) { return Polynomial(std::vector<Scalar>{value}); }
  static Polynomial monomial(const Scalar& value, int degree) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = value;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const Scalar> coefficients() const noexcept { return c_; }

  Scalar coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  template <class T>
  T evaluate(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  /// p(-x).
  Polynomial reflected() const {
    std::vector<Scalar> r = c_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Polynomial(std::move(r));
  }

  /// p(-x) == (-1)^deg p(x): the root multiset is symmetric about the origin.
  bool has_symmetric_roots() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if ((static_cast<int>(c_.size()) - 1 - static_cast<int>(i)) % 2 != 0 && c_[i] != Scalar(0)) {
        return false;
      }
    }
    return true;
  }

  /// p(q(x)).
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form, highest degree first, e.g. "x^3 - 3x - 2".
  std::string to_string(const char* var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Scalar& a = c_[static_cast<std::size_t>(i)];
      if (a == Scalar(0)) continue;
      const bool negative = a < Scalar(0);
      const Scalar mag = negative ? Scalar(-a) : a;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      if (i == 0 || mag != Scalar(1)) os << mag;
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

/// Exact characteristic / matching polynomial coefficients.
using CharPolyInt = Polynomial<BigInt>;
using RationalPoly = Polynomial<Rational>;

template <class To, class From>
Polynomial<To> polynomial_cast(const Polynomial<From>& p) {
  std::vector<To> c;
  c.reserve(p.coefficients().size());
  for (const auto& a : p.coefficients()) c.push_back(To(a));
  return Polynomial<To>(std::move(c));
}

/// Quotient and remainder over a field.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw Error(Errc::BadParams, "polynomial division by zero");
  std::vector<Scalar> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Scalar lead = b.leading();
  std::vector<Scalar> quot(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), Scalar(0));
  for (int i = a.degree(); i >= db; --i) {
    const Scalar f = rem[static_cast<std::size_t>(i)] / lead;
    if (f == Scalar(0)) continue;
    quot[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Monic greatest common divisor over a field.
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Scalar(1) / a.leading());
}

}  // namespace sgs
