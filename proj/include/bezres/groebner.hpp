#pragma once

/**
 * @file groebner.hpp
 * @brief Strong Groebner bases of two-generator ideals (f, g) in Z[x].
 *
 * Over a coefficient ring that is not a field, Buchberger completion needs
 * two kinds of critical polynomials per pair of basis elements with leading
 * terms a x^i and b x^j (i <= j):
 *
 *   S-polynomial  (l/a) x^(j-i) e1 - (l/b) e2,   l = lcm(a, b)
 *   G-polynomial  s x^(j-i) e1 + t e2,           s a + t b = gcd(a, b)
 *
 * The G-polynomial is only needed when neither of a, b divides the other.
 * Every element carries cofactors (u, v) with u f + v g = value, updated
 * through each step, so the basis certifies its own membership in (f, g).
 *
 * In one variable a term c x^k is divisible by a x^i iff i <= k and a | c.
 * Reduction walks the terms from the top down and replaces each coefficient
 * by its remainder modulo the smallest applicable leading coefficient; on
 * the leading term this is exactly a division step whenever the leading
 * coefficient divides.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bezres/errors.hpp"
#include "bezres/integer.hpp"
#include "bezres/poly.hpp"

namespace bezres {

/// u*f + v*g = value for the (f, g) of the computation that produced it.
struct TrackedPoly {
  IntPoly value;
  IntPoly u;
  IntPoly v;
};

struct GroebnerOptions {
  /// Skip cofactor arithmetic when only the basis itself is wanted.
  bool track_cofactors = true;
};

namespace detail {

inline void scale(TrackedPoly& a, const Integer& s, bool track) {
  a.value *= s;
  if (track) {
    a.u *= s;
    a.v *= s;
  }
}

/// a -= s * x^k * b
inline void sub_scaled_shift(TrackedPoly& a, const Integer& s, std::size_t k, const TrackedPoly& b,
                             bool track) {
  a.value.sub_scaled_shift(s, k, b.value);
  if (track) {
    a.u.sub_scaled_shift(s, k, b.u);
    a.v.sub_scaled_shift(s, k, b.v);
  }
}

/// s1 * x^k * a + s2 * b
inline TrackedPoly combine(const Integer& s1, std::size_t k, const TrackedPoly& a,
                           const Integer& s2, const TrackedPoly& b, bool track) {
  TrackedPoly r = b;
  scale(r, s2, track);
  sub_scaled_shift(r, Integer(-s1), k, a, track);
  return r;
}

inline void make_leading_positive(TrackedPoly& a, bool track) {
  if (sgn(a.value.leading()) < 0) scale(a, Integer(-1), track);
}

/// Index of the element with degree <= k whose leading coefficient is
/// smallest in absolute value, if any.
inline std::optional<std::size_t> best_reducer(const std::vector<TrackedPoly>& basis, int k,
                                               std::optional<std::size_t> skip = std::nullopt) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (skip && *skip == i) continue;
    const IntPoly& b = basis[i].value;
    if (b.degree() > k) continue;
    if (!best || mpz_cmpabs(b.leading().get_mpz_t(),
                            basis[*best].value.leading().get_mpz_t()) < 0) {
      best = i;
    }
  }
  return best;
}

/// Remainder-reduces the terms of `a` of degree <= top, highest first.
inline void reduce_terms(TrackedPoly& a, int top, const std::vector<TrackedPoly>& basis, bool track,
                         std::optional<std::size_t> skip = std::nullopt) {
  for (int k = std::min(top, a.value.degree()); k >= 0; --k) {
    const Integer& c = a.value[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    auto idx = best_reducer(basis, k, skip);
    if (!idx) continue;
    const TrackedPoly& b = basis[*idx];
    Integer q = floor_div(c, b.value.leading());
    if (sgn(q) == 0) continue;
    sub_scaled_shift(a, q, static_cast<std::size_t>(k - b.value.degree()), b, track);
  }
}

}  // namespace detail

class GroebnerBasisZ {
 public:
  GroebnerBasisZ() = default;
  explicit GroebnerBasisZ(std::vector<TrackedPoly> elements) : elems_(std::move(elements)) {}

  /// Sorted by (degree, |leading coefficient|), leading coefficients positive.
  const std::vector<TrackedPoly>& elements() const { return elems_; }

  /// The positive constant of the basis, when the ideal meets Z \ {0}.
  const TrackedPoly* constant_element() const {
    if (!elems_.empty() && elems_.front().value.degree() == 0) return &elems_.front();
    return nullptr;
  }

  /// Normal form of p; zero iff p lies in the ideal.
  IntPoly reduce(const IntPoly& p) const {
    TrackedPoly t{p, {}, {}};
    detail::reduce_terms(t, t.value.degree(), elems_, false);
    return t.value;
  }

  bool contains(const IntPoly& p) const { return reduce(p).is_zero(); }

 private:
  std::vector<TrackedPoly> elems_;
};

/// Buchberger completion with S- and G-polynomials, followed by
/// interreduction down to the minimal reduced strong basis.
inline GroebnerBasisZ strong_groebner(const IntPoly& f, const IntPoly& g,
                                      GroebnerOptions opts = {}) {
  if (f.is_zero() && g.is_zero()) throw Error("strong_groebner: both inputs are zero");
  const bool track = opts.track_cofactors;

  std::vector<TrackedPoly> basis;
  std::vector<bool> live;
  struct Pair {
    std::size_t i, j;
  };
  std::vector<Pair> pairs;

  // A new element retires every live element whose leading term it
  // divides; retired elements are reduced again and re-enter if nonzero.
  std::vector<TrackedPoly> requeue;
  auto add = [&](TrackedPoly t) {
    detail::make_leading_positive(t, track);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!live[k]) continue;
      const IntPoly& e = basis[k].value;
      if (e.degree() >= t.value.degree() && divides(t.value.leading(), e.leading())) {
        live[k] = false;
        requeue.push_back(basis[k]);
      } else {
        pairs.push_back({k, basis.size()});
      }
    }
    basis.push_back(std::move(t));
    live.push_back(true);
  };
  auto live_elements = [&] {
    std::vector<TrackedPoly> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (live[k]) out.push_back(basis[k]);
    }
    return out;
  };
  auto reduce_and_add = [&](TrackedPoly t) {
    requeue.push_back(std::move(t));
    while (!requeue.empty()) {
      TrackedPoly h = std::move(requeue.back());
      requeue.pop_back();
      detail::reduce_terms(h, h.value.degree(), live_elements(), track);
      if (!h.value.is_zero()) add(std::move(h));
    }
  };

  if (!f.is_zero()) add({f, IntPoly::constant(1), IntPoly()});
  if (!g.is_zero()) reduce_and_add({g, IntPoly(), IntPoly::constant(1)});

  // Pending pairs are taken in increasing (lcm degree, lcm of leading
  // coefficients) order.
  auto key_less = [&](const Pair& x, const Pair& y) {
    const auto& xi = basis[x.i].value;
    const auto& xj = basis[x.j].value;
    const auto& yi = basis[y.i].value;
    const auto& yj = basis[y.j].value;
    const int dx = std::max(xi.degree(), xj.degree());
    const int dy = std::max(yi.degree(), yj.degree());
    if (dx != dy) return dx < dy;
    const Integer lx = lcm(xi.leading(), xj.leading());
    const Integer ly = lcm(yi.leading(), yj.leading());
    if (lx != ly) return lx < ly;
    return std::tie(x.i, x.j) < std::tie(y.i, y.j);
  };

  for (;;) {
    std::erase_if(pairs, [&](const Pair& p) { return !live[p.i] || !live[p.j]; });
    if (pairs.empty()) break;
    auto it = std::min_element(pairs.begin(), pairs.end(), key_less);
    Pair pr = *it;
    pairs.erase(it);
    std::size_t lo = pr.i, hi = pr.j;
    if (basis[lo].value.degree() > basis[hi].value.degree()) std::swap(lo, hi);
    const TrackedPoly e1 = basis[lo];
    const TrackedPoly e2 = basis[hi];
    const Integer& a = e1.value.leading();
    const Integer& b = e2.value.leading();
    const auto shift = static_cast<std::size_t>(e2.value.degree() - e1.value.degree());

    const Integer l = lcm(a, b);
    TrackedPoly sp = detail::combine(exact_div(l, a), shift, e1, Integer(-exact_div(l, b)), e2, track);
    std::optional<TrackedPoly> gp;
    if (!divides(a, b) && !divides(b, a)) {
      const ExtendedGcd eg = extended_gcd(a, b);
      gp = detail::combine(eg.s, shift, e1, eg.t, e2, track);
    }
    reduce_and_add(std::move(sp));
    if (gp) reduce_and_add(std::move(*gp));
  }
  basis = live_elements();

  // Minimal basis: drop every element whose leading term is divisible by
  // the leading term of an earlier one in (degree, |lc|) order.
  std::sort(basis.begin(), basis.end(), [](const TrackedPoly& x, const TrackedPoly& y) {
    if (x.value.degree() != y.value.degree()) return x.value.degree() < y.value.degree();
    return x.value.leading() < y.value.leading();
  });
  std::vector<TrackedPoly> minimal;
  for (auto& e : basis) {
    bool redundant = false;
    for (const auto& k : minimal) {
      if (divides(k.value.leading(), e.value.leading())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(e));
  }
  // Tail reduction; leading terms are untouched because every other
  // element's leading term fails to divide them.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    detail::reduce_terms(minimal[i], minimal[i].value.degree() - 1, minimal, track, i);
  }
  return GroebnerBasisZ(std::move(minimal));
}

}  // namespace bezres
