#pragma once

/**
 * @file reduced_resultant.hpp
 * @brief r(f, g), the positive generator of (f Z[x] + g Z[x]) ∩ Z, read off
 *        the strong Groebner basis together with a witness p*f + q*g = r.
 */

#include <utility>

#include "bezres/errors.hpp"
#include "bezres/groebner.hpp"
#include "bezres/integer.hpp"
#include "bezres/poly.hpp"

namespace bezres {

struct ReducedResultantCertificate {
  Integer r;
  IntPoly p;
  IntPoly q;
  unsigned j = 0;  // deg(p f) = deg(q g)
};

namespace detail {

/// Moves multiples of g from p to q (via the syzygy (g, -f)) while the
/// leading coefficient of g divides that of p. Keeps the witness small.
inline void shrink_cofactors(IntPoly& p, IntPoly& q, const IntPoly& f, const IntPoly& g) {
  while (p.degree() >= g.degree() && divides(g.leading(), p.leading())) {
    const Integer s = exact_div(p.leading(), g.leading());
    const auto k = static_cast<std::size_t>(p.degree() - g.degree());
    p.sub_scaled_shift(s, k, g);
    q.sub_scaled_shift(Integer(-s), k, f);
  }
}

}  // namespace detail

inline ReducedResultantCertificate reduced_resultant(const IntPoly& f, const IntPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) {
    throw DegreeError("reduced_resultant: both polynomials need positive degree");
  }
  const GroebnerBasisZ gb = strong_groebner(f, g);
  const TrackedPoly* c = gb.constant_element();
  if (c == nullptr) throw NotCoprimeError("reduced_resultant: the ideal contains no nonzero constant");
  ReducedResultantCertificate cert;
  cert.r = c->value.leading();
  cert.p = c->u;
  cert.q = c->v;
  detail::shrink_cofactors(cert.p, cert.q, f, g);
  cert.j = static_cast<unsigned>(cert.p.degree() + f.degree());
  return cert;
}

/// r(f, g) alone, without cofactor bookkeeping.
inline Integer reduced_resultant_value(const IntPoly& f, const IntPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) {
    throw DegreeError("reduced_resultant: both polynomials need positive degree");
  }
  const GroebnerBasisZ gb = strong_groebner(f, g, {.track_cofactors = false});
  const TrackedPoly* c = gb.constant_element();
  if (c == nullptr) throw NotCoprimeError("reduced_resultant: the ideal contains no nonzero constant");
  return c->value.leading();
}

/// True iff the constant c lies in f Z[x] + g Z[x], i.e. r(f, g) | c.
inline bool ideal_membership_constant(const IntPoly& f, const IntPoly& g, const Integer& c) {
  if (sgn(c) == 0) throw Error("ideal_membership_constant: c must be nonzero");
  return strong_groebner(f, g, {.track_cofactors = false}).contains(IntPoly::constant(c));
}

}  // namespace bezres
