#pragma once

/**
 * @file resultant.hpp
 * @brief Res(f, g) two ways, and the integer cofactor certificate
 *        p*f + q*g = R(f, g) with d | cont(p), d | cont(q).
 *
 * Res(f, g) is the determinant of the (m+n)x(m+n) Sylvester matrix with
 * n shifted rows of f above m shifted rows of g. When one argument is a
 * nonzero constant c, Res(c, h) = Res(h, c) = c^deg(h) is applied
 * directly since the matrix is not defined.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "bezres/errors.hpp"
#include "bezres/integer.hpp"
#include "bezres/matrix.hpp"
#include "bezres/poly.hpp"

namespace bezres {

inline IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) {
    throw DegreeError("sylvester_matrix: both polynomials need positive degree");
  }
  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  IntMatrix s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s(i, i + k) = f[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s(n + i, i + k) = g[n - k];
  }
  return s;
}

namespace detail {

/// Res when at least one side is constant; nullopt when both have
/// positive degree.
inline std::optional<Integer> resultant_constant_case(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DegreeError("resultant: zero argument");
  if (f.is_constant() && g.is_constant()) {
    throw DegreeError("resultant: both arguments are constant");
  }
  if (f.is_constant()) return pow(f.leading(), static_cast<unsigned long>(g.degree()));
  if (g.is_constant()) return pow(g.leading(), static_cast<unsigned long>(f.degree()));
  return std::nullopt;
}

inline bool odd(int k) { return (k & 1) != 0; }

}  // namespace detail

/// Signed Res(f, g) via Bareiss elimination of the Sylvester matrix.
inline Integer resultant_bareiss(const IntPoly& f, const IntPoly& g) {
  if (auto c = detail::resultant_constant_case(f, g)) return *c;
  return bareiss_determinant(sylvester_matrix(f, g));
}

/// Signed Res(f, g) via the subresultant polynomial remainder sequence.
inline Integer resultant_prs(const IntPoly& f, const IntPoly& g) {
  if (auto c = detail::resultant_constant_case(f, g)) return *c;
  IntPoly a = f;
  IntPoly b = g;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (detail::odd(a.degree()) && detail::odd(b.degree())) s = -s;
  }
  const Integer ca = content(a);
  const Integer cb = content(b);
  a = exact_div(a, ca);
  b = exact_div(b, cb);
  const Integer t = pow(ca, static_cast<unsigned long>(b.degree())) *
                    pow(cb, static_cast<unsigned long>(a.degree()));
  Integer gg = 1;
  Integer h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (detail::odd(a.degree()) && detail::odd(b.degree())) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = exact_div(r, gg * pow(h, static_cast<unsigned long>(delta)));
    gg = a.leading();
    if (delta == 1) {
      h = gg;
    } else if (delta > 1) {
      h = exact_div(pow(gg, static_cast<unsigned long>(delta)),
                    pow(h, static_cast<unsigned long>(delta - 1)));
    }
    if (b.is_zero()) return 0;
    if (b.degree() == 0) break;
  }
  const auto da = static_cast<unsigned long>(a.degree());
  h = exact_div(pow(b.leading(), da), pow(h, da - 1));
  Integer res = t * h;
  if (s < 0) res = -res;
  return res;
}

/// pbar*f + qbar*g = R = |Res(f, g)|, deg pbar < deg g, deg qbar < deg f,
/// d | cont(pbar), d | cont(qbar), res_sign*R = Res(f, g).
struct ResultantCertificate {
  IntPoly pbar;
  IntPoly qbar;
  Integer R;
  int res_sign = 1;
  Integer d;

  Integer signed_resultant() const { return res_sign < 0 ? Integer(-R) : R; }
};

/// Builds the certificate from the last-column cofactors of the Sylvester
/// matrix whose first column has been divided by d = gcd(L(f), L(g)).
inline ResultantCertificate resultant_certificate(const IntPoly& f, const IntPoly& g) {
  IntMatrix s = sylvester_matrix(f, g);
  const Integer res = bareiss_determinant(s);
  if (sgn(res) == 0) throw NotCoprimeError("resultant_certificate: Res(f, g) = 0");

  const auto m = static_cast<std::size_t>(f.degree());
  const auto n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  const Integer d = gcd(f.leading(), g.leading());
  s(0, 0) = exact_div(s(0, 0), d);
  s(n, 0) = exact_div(s(n, 0), d);

  std::vector<Integer> cof(size);
  for (std::size_t i = 0; i < size; ++i) {
    Integer minor_det = bareiss_determinant(s.minor(i, size - 1));
    // (-1)^((i+1) + size) with 1-based row i+1
    cof[i] = ((i + 1 + size) % 2 == 0) ? minor_det : Integer(-minor_det);
  }

  std::vector<Integer> p_high(cof.begin(), cof.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<Integer> q_high(cof.begin() + static_cast<std::ptrdiff_t>(n), cof.end());
  ResultantCertificate c;
  c.pbar = IntPoly::from_high_first(std::move(p_high)) * d;
  c.qbar = IntPoly::from_high_first(std::move(q_high)) * d;
  c.d = d;
  c.R = abs(res);
  c.res_sign = sgn(res) < 0 ? -1 : 1;
  if (c.res_sign < 0) {
    c.pbar = -c.pbar;
    c.qbar = -c.qbar;
  }
  return c;
}

/// Re-checks every certificate invariant against (f, g).
inline bool certificate_holds(const ResultantCertificate& c, const IntPoly& f, const IntPoly& g) {
  if (sgn(c.R) <= 0 || sgn(c.d) <= 0) return false;
  if (c.pbar * f + c.qbar * g != IntPoly::constant(c.R)) return false;
  if (c.pbar.degree() >= g.degree() || c.qbar.degree() >= f.degree()) return false;
  if (!divides(c.d, content(c.pbar)) || !divides(c.d, content(c.qbar))) return false;
  if (!divides(c.d, c.R)) return false;
  if (c.d != gcd(f.leading(), g.leading())) return false;
  return c.signed_resultant() == resultant_bareiss(f, g);
}

/// Outcome of one classical identity; holds is empty when the identity's
/// hypotheses are not met by the given arguments.
struct IdentityCheck {
  std::string name;
  std::optional<bool> holds;
  std::string note;
};

struct IdentityReport {
  IdentityCheck swap_sign;       // Res(h1,h2) = (-1)^(deg h1 deg h2) Res(h2,h1)
  IdentityCheck multiplicative;  // Res(h, h1 h2) = Res(h,h1) Res(h,h2)
  IdentityCheck constant;        // Res(c,h) = Res(h,c) = c^deg h
  IdentityCheck reduction;       // Res(h1, s h1 + h2) = L(h1)^(deg(s h1 + h2) - deg h2) Res(h1, h2)

  bool none_failed() const {
    for (const auto* c : {&swap_sign, &multiplicative, &constant, &reduction}) {
      if (c->holds && !*c->holds) return false;
    }
    return true;
  }
};

/// Evaluates the four classical resultant identities with
/// resultant_bareiss. In the reduction identity h2 plays the remainder t.
inline IdentityReport check_resultant_identities(const IntPoly& h1, const IntPoly& h2,
                                                 const IntPoly& h, const Integer& c,
                                                 const IntPoly& s) {
  IdentityReport rep;
  rep.swap_sign.name = "swap_sign";
  if (h1.is_zero() || h2.is_zero() || (h1.is_constant() && h2.is_constant())) {
    rep.swap_sign.note = "needs nonzero arguments, one of positive degree";
  } else {
    Integer lhs = resultant_bareiss(h1, h2);
    Integer rhs = resultant_bareiss(h2, h1);
    if (detail::odd(h1.degree()) && detail::odd(h2.degree())) rhs = -rhs;
    rep.swap_sign.holds = lhs == rhs;
    rep.swap_sign.note = lhs.get_str() + " vs " + rhs.get_str();
  }

  rep.multiplicative.name = "multiplicative";
  if (h.degree() < 1 || h1.is_zero() || h2.is_zero()) {
    rep.multiplicative.note = "needs deg h >= 1 and nonzero h1, h2";
  } else {
    Integer lhs = resultant_bareiss(h, h1 * h2);
    Integer rhs = resultant_bareiss(h, h1) * resultant_bareiss(h, h2);
    rep.multiplicative.holds = lhs == rhs;
    rep.multiplicative.note = lhs.get_str() + " vs " + rhs.get_str();
  }

  rep.constant.name = "constant";
  if (sgn(c) == 0 || h.degree() < 1) {
    rep.constant.note = "needs c != 0 and deg h >= 1";
  } else {
    const IntPoly cp = IntPoly::constant(c);
    Integer expected = pow(c, static_cast<unsigned long>(h.degree()));
    Integer a = resultant_bareiss(cp, h);
    Integer b = resultant_bareiss(h, cp);
    rep.constant.holds = a == expected && b == expected;
    rep.constant.note = a.get_str() + ", " + b.get_str() + " vs " + expected.get_str();
  }

  rep.reduction.name = "reduction";
  const IntPoly combined = s * h1 + h2;
  if (h1.degree() < 1 || h2.is_zero() || combined.is_zero()) {
    rep.reduction.note = "needs deg h1 >= 1, h2 != 0 and s*h1 + h2 != 0";
  } else {
    // Cross-multiplied so a negative exponent stays exact.
    Integer lhs = resultant_bareiss(h1, combined) *
                  pow(h1.leading(), static_cast<unsigned long>(h2.degree()));
    Integer rhs = resultant_bareiss(h1, h2) *
                  pow(h1.leading(), static_cast<unsigned long>(combined.degree()));
    rep.reduction.holds = lhs == rhs;
    rep.reduction.note = lhs.get_str() + " vs " + rhs.get_str();
  }
  return rep;
}

}  // namespace bezres
