#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over the integers and the rationals.
 *
 * Coefficients are stored lowest degree first so that the coefficient of
 * x^k is simply element k; construction from a brace list and the
 * high_first() accessor use the usual written order (highest degree
 * first), so IntPoly{6, 0, 5} is 6x^2 + 5.
 *
 * A Poly is always normalized: the stored leading coefficient is nonzero,
 * and the zero polynomial has no coefficients at all and degree
 * kZeroDegree.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "bezres/errors.hpp"
#include "bezres/integer.hpp"

namespace bezres {

/// Degree reported for the zero polynomial (stands in for minus infinity;
/// it compares below every real degree).
inline constexpr int kZeroDegree = -1;

template <class Coeff>
class Poly {
 public:
  using coeff_type = Coeff;

  Poly() = default;

  /// Coefficients in written order, highest degree first.
  Poly(std::initializer_list<Coeff> high_first)
      : c_(high_first.begin(), high_first.end()) {
    std::reverse(c_.begin(), c_.end());
    normalize();
  }

  static Poly from_high_first(std::vector<Coeff> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return from_low_first(std::move(coeffs));
  }

  static Poly from_low_first(std::vector<Coeff> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
  }

  static Poly constant(Coeff c) { return from_low_first({std::move(c)}); }

  /// c * x^k
  static Poly monomial(Coeff c, std::size_t k) {
    std::vector<Coeff> v(k + 1);
    v[k] = std::move(c);
    return from_low_first(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const Coeff& leading() const { return c_.empty() ? zero() : c_.back(); }

  /// Coefficient of x^k (zero beyond the degree).
  const Coeff& operator[](std::size_t k) const {
    return k < c_.size() ? c_[k] : zero();
  }

  std::span<const Coeff> low_first() const { return c_; }

  std::vector<Coeff> high_first() const {
    return std::vector<Coeff>(c_.rbegin(), c_.rend());
  }

  /// this * x^k
  Poly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(k, Coeff(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  Poly& operator*=(const Coeff& s) {
    if (bezres::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  /// this -= s * x^k * o, the elimination step used by every division loop.
  void sub_scaled_shift(const Coeff& s, std::size_t k, const Poly& o) {
    if (o.c_.size() + k > c_.size()) c_.resize(o.c_.size() + k, Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i + k] -= s * o.c_[i];
    normalize();
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Coeff& s) { return a *= s; }
  friend Poly operator*(const Coeff& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (bezres::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return from_low_first(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  static const Coeff& zero() {
    static const Coeff z(0);
    return z;
  }

  void normalize() {
    while (!c_.empty() && bezres::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <class Coeff>
struct DegreeLeading {
  int degree;  // kZeroDegree for the zero polynomial
  Coeff leading;
};

template <class Coeff>
DegreeLeading<Coeff> degree_leading(const Poly<Coeff>& p) {
  return {p.degree(), p.leading()};
}

struct ContentHeight {
  Integer content;  // gcd of |coefficients|, 0 for the zero polynomial
  Integer height;   // max |coefficient|, 0 for the zero polynomial
};

inline Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p.low_first()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

inline Integer height(const IntPoly& p) {
  Integer h = 0;
  for (const auto& c : p.low_first()) {
    if (mpz_cmpabs(c.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(c);
  }
  return h;
}

inline ContentHeight content_height(const IntPoly& p) {
  return {content(p), height(p)};
}

/// Divide every coefficient by c; c must divide all of them.
inline IntPoly exact_div(const IntPoly& p, const Integer& c) {
  std::vector<Integer> v(p.low_first().begin(), p.low_first().end());
  for (auto& x : v) x = exact_div(x, c);
  return IntPoly::from_low_first(std::move(v));
}

/// p / cont(p), with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  return exact_div(p, c);
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.low_first().size());
  for (const auto& c : p.low_first()) v.emplace_back(c);
  return RatPoly::from_low_first(std::move(v));
}

/// lcm of the denominators of the (lowest-terms) coefficients; 1 for zero.
inline Integer denominator_lcm(const RatPoly& p) {
  Integer l = 1;
  for (const auto& c : p.low_first()) l = lcm(l, c.get_den());
  return l;
}

/// s * p, which must land in Z[x].
inline IntPoly scale_to_integer(const RatPoly& p, const Integer& s) {
  std::vector<Integer> v;
  v.reserve(p.low_first().size());
  for (const auto& c : p.low_first()) {
    Rational x = c * s;
    if (x.get_den() != 1) throw Error("scale_to_integer: non-integral result");
    v.push_back(x.get_num());
  }
  return IntPoly::from_low_first(std::move(v));
}

template <class Coeff>
struct DivRem {
  Poly<Coeff> quot;
  Poly<Coeff> rem;
};

/// Euclidean division over the rationals: a = quot*b + rem, deg rem < deg b.
inline DivRem<Rational> divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw Error("divrem: division by the zero polynomial");
  DivRem<Rational> r{RatPoly(), a};
  const int db = b.degree();
  if (a.degree() < db) return r;
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lb = b.leading();
  while (r.rem.degree() >= db) {
    const auto k = static_cast<std::size_t>(r.rem.degree() - db);
    Rational s = r.rem.leading() / lb;
    q[k] = s;
    r.rem.sub_scaled_shift(s, k, b);
  }
  r.quot = RatPoly::from_low_first(std::move(q));
  return r;
}

/// Pseudo-remainder: L(b)^(deg a - deg b + 1) * a = Q*b + prem.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error("pseudo_remainder: division by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return a;
  IntPoly r = a;
  int steps = a.degree() - db + 1;
  const Integer& lb = b.leading();
  while (r.degree() >= db) {
    const auto k = static_cast<std::size_t>(r.degree() - db);
    Integer lr = r.leading();
    r *= lb;
    r.sub_scaled_shift(lr, k, b);
    --steps;
  }
  if (steps > 0) r *= pow(lb, static_cast<unsigned long>(steps));
  return r;
}

/// Monic gcd in Q[x]. Equals 1 iff f and g have no common complex root.
inline RatPoly rat_gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error("rat_gcd: both inputs are zero");
  RatPoly a = to_rational(f);
  RatPoly b = to_rational(g);
  while (!b.is_zero()) {
    RatPoly r = divrem(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  Rational inv = 1 / a.leading();
  return a * inv;
}

/// gcd in Z[x] (unique up to sign; returned with positive leading
/// coefficient), via the primitive polynomial remainder sequence.
inline IntPoly gcd_zx(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return primitive_part(g) * content(g);
  if (g.is_zero()) return primitive_part(f) * content(f);
  Integer c = gcd(content(f), content(g));
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(a) * c;
}

/// Horner evaluation at a rational point.
template <class Coeff>
Rational evaluate(const Poly<Coeff>& p, const Rational& x) {
  Rational acc = 0;
  const auto c = p.low_first();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += Rational(*it);
  }
  return acc;
}

}  // namespace bezres
