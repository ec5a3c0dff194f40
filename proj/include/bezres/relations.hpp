#pragma once

/**
 * @file relations.hpp
 * @brief The triple (B, r, R) of a coprime pair with all three certificates,
 *        and exact checks of the divisibility relations among B, r, R and d.
 *
 * Every check here is a proved statement: a failing outcome means a bug
 * in one of the computations, not a counterexample.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bezres/bezout.hpp"
#include "bezres/errors.hpp"
#include "bezres/integer.hpp"
#include "bezres/parse.hpp"
#include "bezres/poly.hpp"
#include "bezres/reduced_resultant.hpp"
#include "bezres/resultant.hpp"

namespace bezres {

struct TripleReport {
  IntPoly f;
  IntPoly g;
  int m = 0;
  int n = 0;
  Integer d;
  Integer B;
  Integer r;
  Integer R;
  BezoutCertificate bezout;
  ResultantCertificate res_cert;
  ReducedResultantCertificate red_cert;
  unsigned k_min = 0;    // least k with B | d^k r
  unsigned k_bound = 0;  // max(deg p - deg g + 1, 0) for the witness p of r
  unsigned j = 0;        // deg(p f) of the witness of r
};

namespace detail {

inline void require_coprime_positive_degree(const IntPoly& f, const IntPoly& g, const char* who) {
  if (f.is_zero() || g.is_zero()) throw DegreeError(std::string(who) + ": zero polynomial");
  if (f.degree() < 1 || g.degree() < 1) {
    throw DegreeError(std::string(who) + ": both polynomials need positive degree");
  }
  if (rat_gcd(f, g).degree() > 0) throw NotCoprimeError(std::string(who) + ": f and g share a root");
}

}  // namespace detail

inline TripleReport triple_report(const IntPoly& f, const IntPoly& g) {
  detail::require_coprime_positive_degree(f, g, "triple_report");
  TripleReport t;
  t.f = f;
  t.g = g;
  t.m = f.degree();
  t.n = g.degree();
  t.d = gcd(f.leading(), g.leading());
  t.res_cert = resultant_certificate(f, g);
  t.bezout = bezout_certificate(f, g);
  t.red_cert = reduced_resultant(f, g);
  t.R = t.res_cert.R;
  t.B = t.bezout.B;
  t.r = t.red_cert.r;
  t.j = t.red_cert.j;
  t.k_bound = static_cast<unsigned>(std::max(t.red_cert.p.degree() - t.n + 1, 0));
  // Past the bound only for diagnostics; the checks flag k_min > k_bound.
  Integer acc = t.r;
  t.k_min = 0;
  while (!divides(t.B, acc) && t.k_min <= t.k_bound + 64) {
    acc *= t.d;
    ++t.k_min;
  }
  return t;
}

/// Every field of the report, one per line.
inline std::string diagnostic_dump(const TripleReport& t) {
  std::ostringstream os;
  os << "f = " << format_poly(t.f) << "\n"
     << "g = " << format_poly(t.g) << "\n"
     << "m = " << t.m << ", n = " << t.n << ", d = " << t.d << "\n"
     << "B = " << t.B << ", r = " << t.r << ", R = " << t.R << "\n"
     << "k_min = " << t.k_min << ", k_bound = " << t.k_bound << ", j = " << t.j << "\n"
     << "bezout: p = " << t.bezout.p << ", q = " << t.bezout.q << ", Bp = " << format_poly(t.bezout.Bp)
     << ", Bq = " << format_poly(t.bezout.Bq) << "\n"
     << "resultant: pbar = " << format_poly(t.res_cert.pbar) << ", qbar = " << format_poly(t.res_cert.qbar)
     << ", sign = " << t.res_cert.res_sign << "\n"
     << "reduced: p = " << format_poly(t.red_cert.p) << ", q = " << format_poly(t.red_cert.q) << "\n";
  return os.str();
}

struct CheckOutcome {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// Same set of prime divisors, decided without factoring: a's support lies
/// in b's iff stripping gcd(a, b) from a repeatedly reaches 1.
inline bool radical_equal(const Integer& a, const Integer& b) {
  if (sgn(a) == 0 || sgn(b) == 0) throw Error("radical_equal: zero argument");
  auto support_within = [](Integer x, const Integer& y) {
    x = abs(x);
    for (Integer g = gcd(x, y); g != 1; g = gcd(x, y)) x = exact_div(x, g);
    return x == 1;
  };
  return support_within(a, b) && support_within(b, a);
}

namespace detail {

inline std::string s(const Integer& x) { return x.get_str(); }

inline CheckOutcome divides_check(std::string name, const Integer& a, const Integer& b,
                                  const std::string& a_text, const std::string& b_text) {
  return {std::move(name), divides(a, b), a_text + " = " + s(a) + " | " + b_text + " = " + s(b)};
}

inline Integer upow(const Integer& x, int e) { return pow(x, static_cast<unsigned long>(e)); }

}  // namespace detail

inline std::vector<CheckOutcome> verify_divisibility(const TripleReport& t) {
  using detail::divides_check;
  using detail::s;
  using detail::upow;
  std::vector<CheckOutcome> out;
  const IntPoly& f = t.f;
  const IntPoly& g = t.g;
  const int mx = std::max(t.m, t.n);
  const int mn = std::min(t.m, t.n);
  const bool f_monic = f.leading() == 1;
  const bool g_monic = g.leading() == 1;

  out.push_back(divides_check("r_divides_B", t.r, t.B, "r", "B"));
  out.push_back(divides_check("r_divides_R", t.r, t.R, "r", "R"));
  out.push_back(divides_check("d_divides_R", t.d, t.R, "d", "R"));
  out.push_back({"resultant_certificate", certificate_holds(t.res_cert, f, g),
                 "pbar = " + format_poly(t.res_cert.pbar) + ", qbar = " + format_poly(t.res_cert.qbar)});

  {
    const auto& b = t.bezout;
    bool ok = b.Bp * f + b.Bq * g == IntPoly::constant(t.B) && b.Bp.degree() < t.n &&
              b.Bq.degree() < t.m && sgn(t.B) > 0;
    out.push_back({"bezout_certificate", ok, "Bp = " + format_poly(b.Bp) + ", Bq = " + format_poly(b.Bq)});
    Integer cg = gcd(content(b.Bp), content(b.Bq));
    out.push_back({"bezout_minimal", cg == 1, "gcd(cont Bp, cont Bq) = " + s(cg)});
    Integer via_res = bezout_from_resultant(t.res_cert);
    out.push_back({"bezout_matches_resultant_route", via_res == t.B, "R/gcd(cont pbar, cont qbar) = " + s(via_res)});
  }

  {
    const auto& c = t.red_cert;
    bool ok = c.p * f + c.q * g == IntPoly::constant(t.r) &&
              static_cast<int>(c.j) == c.p.degree() + t.m && static_cast<int>(c.j) == c.q.degree() + t.n;
    out.push_back({"reduced_certificate", ok,
                   "p = " + format_poly(c.p) + ", q = " + format_poly(c.q) + ", j = " + std::to_string(c.j)});
  }

  out.push_back(divides_check("B_divides_d^k_min_r", t.B, upow(t.d, static_cast<int>(t.k_min)) * t.r, "B",
                              "d^" + std::to_string(t.k_min) + " r"));
  out.push_back({"k_min_within_bound", t.k_min <= t.k_bound,
                 "k_min = " + std::to_string(t.k_min) + ", bound = " + std::to_string(t.k_bound)});
  {
    bool minimal = t.k_min == 0 || !divides(t.B, upow(t.d, static_cast<int>(t.k_min) - 1) * t.r);
    out.push_back({"k_min_minimal", minimal, "k_min = " + std::to_string(t.k_min)});
  }
  {
    CheckOutcome c{"degree_reduction", false, ""};
    try {
      ReducedRelation rr = reduce_relation(t.red_cert.p, t.red_cert.q, f, g, t.r);
      c.holds = rr.p_k * f + rr.q_k * g == IntPoly::constant(rr.value) && rr.p_k.degree() < t.n &&
                rr.q_k.degree() < t.m && rr.value == upow(t.d, static_cast<int>(rr.k)) * t.r &&
                rr.k <= t.k_bound && divides(t.B, rr.value);
      c.detail = "k = " + std::to_string(rr.k) + ", value = " + s(rr.value);
    } catch (const Error& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }

  out.push_back(divides_check("R_divides_d^j_r^max", t.R,
                              upow(t.d, static_cast<int>(t.j)) * upow(t.r, mx), "R",
                              "d^" + std::to_string(t.j) + " r^" + std::to_string(mx)));
  {
    const Integer res = t.res_cert.signed_resultant();
    Integer lhs = upow(f.leading(), static_cast<int>(t.j)) * upow(t.r, t.m);
    Integer rhs = res * resultant_bareiss(f, t.red_cert.q);
    out.push_back({"leading_power_identity_f", lhs == rhs, s(lhs) + " vs " + s(rhs)});
    Integer res_gf = detail::odd(t.m) && detail::odd(t.n) ? Integer(-res) : res;
    Integer lhs_g = upow(g.leading(), static_cast<int>(t.j)) * upow(t.r, t.n);
    Integer rhs_g = res_gf * resultant_bareiss(g, t.red_cert.p);
    out.push_back({"leading_power_identity_g", lhs_g == rhs_g, s(lhs_g) + " vs " + s(rhs_g)});
  }
  if (f_monic && g_monic) {
    out.push_back(divides_check("monic_R_divides_r^min", t.R, upow(t.r, mn), "R", "r^" + std::to_string(mn)));
  }
  if (f_monic) {
    out.push_back(divides_check("f_monic_R_divides_r^m", t.R, upow(t.r, t.m), "R", "r^" + std::to_string(t.m)));
  }
  if (g_monic) {
    out.push_back(divides_check("g_monic_R_divides_r^n", t.R, upow(t.r, t.n), "R", "r^" + std::to_string(t.n)));
  }

  out.push_back(divides_check("dB_divides_R", t.d * t.B, t.R, "dB", "R"));
  out.push_back(divides_check("R_divides_d^(m+n-1)_B^max", t.R, upow(t.d, t.m + t.n - 1) * upow(t.B, mx), "R",
                              "d^" + std::to_string(t.m + t.n - 1) + " B^" + std::to_string(mx)));
  if (f_monic && g_monic) {
    out.push_back(divides_check("monic_R_divides_B^min", t.R, upow(t.B, mn), "R", "B^" + std::to_string(mn)));
  }
  out.push_back({"ordering_1<=r<=B<=R", 1 <= t.r && t.r <= t.B && t.B <= t.R,
                 "r = " + s(t.r) + ", B = " + s(t.B) + ", R = " + s(t.R)});
  return out;
}

inline std::vector<CheckOutcome> verify_corollaries(const TripleReport& t) {
  using detail::s;
  std::vector<CheckOutcome> out;
  const std::string vals = "d = " + s(t.d) + ", B = " + s(t.B) + ", r = " + s(t.r) + ", R = " + s(t.R);
  if (t.d == 1) {
    out.push_back({"d1_implies_B_eq_r", t.B == t.r, vals});
    out.push_back({"d1_same_primes_B_r_R", radical_equal(t.B, t.r) && radical_equal(t.r, t.R), vals});
  } else {
    out.push_back({"d_gt1_implies_B_ne_R_and_r_ne_R", t.B != t.R && t.r != t.R, vals});
  }
  out.push_back({"B_eq_R_iff_r_eq_R", (t.B == t.R) == (t.r == t.R), vals});
  out.push_back({"same_primes_R_dr", radical_equal(t.R, t.d * t.r), vals});
  out.push_back({"same_primes_R_dB", radical_equal(t.R, t.d * t.B), vals});
  {
    const IntPoly gz = gcd_zx(t.f, t.g);
    const Integer cg = gcd(content(t.f), content(t.g));
    out.push_back({"zx_gcd_is_content_gcd", gz == IntPoly::constant(cg),
                   "gcd in Z[x] = " + format_poly(gz) + ", gcd of contents = " + s(cg)});
  }
  return out;
}

/// All outcomes of both verifiers.
inline std::vector<CheckOutcome> verify_all(const TripleReport& t) {
  std::vector<CheckOutcome> out = verify_divisibility(t);
  std::vector<CheckOutcome> cor = verify_corollaries(t);
  out.insert(out.end(), std::make_move_iterator(cor.begin()), std::make_move_iterator(cor.end()));
  return out;
}

class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Throws TheoremViolation carrying the failed checks and a full dump.
inline void require_all(const std::vector<CheckOutcome>& outcomes, const TripleReport& t) {
  std::string failed;
  for (const auto& o : outcomes) {
    if (!o.holds) failed += "  FAILED " + o.name + ": " + o.detail + "\n";
  }
  if (!failed.empty()) throw TheoremViolation("theorem check failed\n" + failed + diagnostic_dump(t));
}

struct ClosedFormBR {
  Integer B;
  Integer R;
};

/// f = a x + b, g = c x + e: R = |a e - b c|, B = R / gcd(a, c).
inline ClosedFormBR degree_one_closed_form(const IntPoly& f, const IntPoly& g) {
  if (f.degree() != 1 || g.degree() != 1) throw DegreeError("degree_one_closed_form: needs two linear polynomials");
  const Integer& a = f[1];
  const Integer& b = f[0];
  const Integer& c = g[1];
  const Integer& e = g[0];
  Integer R = abs(a * e - b * c);
  if (sgn(R) == 0) throw NotCoprimeError("degree_one_closed_form: common root");
  return {exact_div(R, gcd(a, c)), R};
}

/// Per-check pass/fail counts over many pairs.
struct CheckTally {
  struct Count {
    std::uint64_t evaluated = 0;
    std::uint64_t failed = 0;
  };
  std::map<std::string, Count> by_name;
  std::uint64_t pairs = 0;
  std::vector<std::string> failures;  // first few diagnostic dumps

  void add(const TripleReport& t, const std::vector<CheckOutcome>& outcomes, std::size_t keep = 5) {
    ++pairs;
    bool bad = false;
    for (const auto& c : outcomes) {
      Count& k = by_name[c.name];
      ++k.evaluated;
      if (!c.holds) {
        ++k.failed;
        bad = true;
      }
    }
    if (bad && failures.size() < keep) failures.push_back(diagnostic_dump(t));
  }

  std::uint64_t failed_checks() const {
    std::uint64_t n = 0;
    for (const auto& [name, k] : by_name) n += k.failed;
    return n;
  }
};

}  // namespace bezres
