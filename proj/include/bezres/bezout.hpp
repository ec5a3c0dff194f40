#pragma once

/**
 * @file bezout.hpp
 * @brief The rational Bezout pair p*f + q*g = 1 (deg p < deg g,
 *        deg q < deg f), its denominator B(f, g), and the leading-term
 *        reduction that turns any integer relation p*f + q*g = c into a
 *        degree-bounded one with value d^k * c.
 */

#include <utility>

#include "bezres/errors.hpp"
#include "bezres/integer.hpp"
#include "bezres/poly.hpp"
#include "bezres/resultant.hpp"

namespace bezres {

struct BezoutPair {
  RatPoly p;
  RatPoly q;
};

namespace detail {

inline void require_positive_degree(const IntPoly& f, const IntPoly& g, const char* who) {
  if (f.degree() < 1 || g.degree() < 1) {
    throw DegreeError(std::string(who) + ": both polynomials need positive degree");
  }
}

}  // namespace detail

/// Extended Euclid over Q, then p is reduced mod g (q follows) so the
/// degree bounds hold.
inline BezoutPair bezout_pair(const IntPoly& f, const IntPoly& g) {
  detail::require_positive_degree(f, g, "bezout_pair");
  const RatPoly ff = to_rational(f);
  const RatPoly gg = to_rational(g);
  RatPoly r0 = ff, r1 = gg;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [quot, rem] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(rem));
    s0 = std::exchange(s1, s0 - quot * s1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  if (r0.degree() > 0) throw NotCoprimeError("bezout_pair: f and g share a root");
  const Rational inv = 1 / r0.leading();
  RatPoly p = s0 * inv;
  RatPoly q = t0 * inv;
  auto [quot, rem] = divrem(p, gg);
  p = std::move(rem);
  q += quot * ff;
  return {std::move(p), std::move(q)};
}

/// Bp*f + Bq*g = B with B the lcm of all denominators of the Bezout pair.
struct BezoutCertificate {
  RatPoly p;
  RatPoly q;
  Integer B;
  IntPoly Bp;
  IntPoly Bq;
};

inline BezoutCertificate bezout_certificate(const IntPoly& f, const IntPoly& g) {
  BezoutPair pair = bezout_pair(f, g);
  BezoutCertificate c;
  c.B = lcm(denominator_lcm(pair.p), denominator_lcm(pair.q));
  c.Bp = scale_to_integer(pair.p, c.B);
  c.Bq = scale_to_integer(pair.q, c.B);
  c.p = std::move(pair.p);
  c.q = std::move(pair.q);
  return c;
}

/// The Bezout pair is pbar/R, qbar/R, so B = R / gcd(cont pbar, cont qbar).
inline Integer bezout_from_resultant(const ResultantCertificate& cert) {
  return exact_div(cert.R, gcd(content(cert.pbar), content(cert.qbar)));
}

/// p_k*f + q_k*g = value = d^k * c with deg p_k < deg g, deg q_k < deg f.
struct ReducedRelation {
  IntPoly p_k;
  IntPoly q_k;
  unsigned k = 0;
  Integer value;
};

/// Repeatedly scales the relation by d and cancels the leading terms of
/// p and q against multiples of g and f until deg p < deg g. Each round
/// lowers deg p by at least one, so k <= max(deg p - deg g + 1, 0).
inline ReducedRelation reduce_relation(IntPoly p, IntPoly q, const IntPoly& f, const IntPoly& g,
                                       const Integer& c) {
  detail::require_positive_degree(f, g, "reduce_relation");
  if (sgn(c) == 0) throw RelationError("reduce_relation: value must be nonzero");
  if (p * f + q * g != IntPoly::constant(c)) {
    throw RelationError("reduce_relation: p*f + q*g != c");
  }
  const Integer d = gcd(f.leading(), g.leading());
  ReducedRelation out{std::move(p), std::move(q), 0, c};
  while (out.p_k.degree() >= g.degree()) {
    const Integer lp = d * out.p_k.leading();
    const Integer lq = d * out.q_k.leading();
    if (!divides(g.leading(), lp) || !divides(f.leading(), lq) ||
        out.q_k.degree() < f.degree()) {
      throw RelationError("reduce_relation: leading terms do not cancel");
    }
    out.p_k *= d;
    out.p_k.sub_scaled_shift(exact_div(lp, g.leading()),
                             static_cast<std::size_t>(out.p_k.degree() - g.degree()), g);
    out.q_k *= d;
    out.q_k.sub_scaled_shift(exact_div(lq, f.leading()),
                             static_cast<std::size_t>(out.q_k.degree() - f.degree()), f);
    out.value *= d;
    ++out.k;
  }
  return out;
}

}  // namespace bezres
