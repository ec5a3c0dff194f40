#pragma once

/**
 * @file lattice.hpp
 * @brief Hermite normal form and the bounded-degree coefficient lattice of
 *        an ideal (f, g), used as an oracle for the reduced resultant.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "bezres/errors.hpp"
#include "bezres/integer.hpp"
#include "bezres/matrix.hpp"
#include "bezres/poly.hpp"

namespace bezres {

/// Row-style Hermite normal form: the nonzero rows of the result span the
/// same lattice as the input rows, are in echelon form with positive
/// pivots, and entries above each pivot lie in [0, pivot). Zero rows are
/// dropped.
inline IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  auto row_combine = [&](std::size_t p, std::size_t i, const Integer& s, const Integer& t,
                         const Integer& u, const Integer& v) {
    // (row_p, row_i) <- (s row_p + t row_i, u row_p + v row_i)
    for (std::size_t j = 0; j < cols; ++j) {
      Integer np = s * a(p, j) + t * a(i, j);
      Integer ni = u * a(p, j) + v * a(i, j);
      a(p, j) = std::move(np);
      a(i, j) = std::move(ni);
    }
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t first = pivot_row;
    while (first < rows && sgn(a(first, col)) == 0) ++first;
    if (first == rows) continue;
    a.swap_rows(pivot_row, first);
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Integer x = a(pivot_row, col);
      const Integer y = a(i, col);
      const ExtendedGcd eg = extended_gcd(x, y);
      // det [[s, t], [-y/g, x/g]] = (s x + t y)/g = 1
      row_combine(pivot_row, i, eg.s, eg.t, Integer(-exact_div(y, eg.g)), exact_div(x, eg.g));
    }
    if (sgn(a(pivot_row, col)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(pivot_row, j) = -a(pivot_row, j);
    }
    const Integer piv = a(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q = floor_div(a(i, col), piv);
      if (sgn(q) == 0) continue;
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= q * a(pivot_row, j);
    }
    ++pivot_row;
  }

  IntMatrix h(pivot_row, cols);
  for (std::size_t i = 0; i < pivot_row; ++i) {
    for (std::size_t j = 0; j < cols; ++j) h(i, j) = a(i, j);
  }
  return h;
}

/// Rows are the coefficient vectors (x^D down to x^0) of x^i f, 0 <= i <= D-m,
/// and x^j g, 0 <= j <= D-n.
inline IntMatrix shifted_multiples_matrix(const IntPoly& f, const IntPoly& g, int degree_bound) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 1 || n < 1) throw DegreeError("lattice: both polynomials need positive degree");
  if (degree_bound < std::max(m, n)) throw Error("lattice: degree bound below max(deg f, deg g)");
  const auto cols = static_cast<std::size_t>(degree_bound + 1);
  const auto rows = static_cast<std::size_t>(degree_bound - m + 1 + degree_bound - n + 1);
  IntMatrix a(rows, cols);
  std::size_t r = 0;
  auto put = [&](const IntPoly& p, int shift) {
    for (int k = 0; k <= p.degree(); ++k) {
      // column index of x^(k+shift) when column 0 is x^D
      a(r, static_cast<std::size_t>(degree_bound - (k + shift))) = p[static_cast<std::size_t>(k)];
    }
    ++r;
  };
  for (int i = 0; i <= degree_bound - m; ++i) put(f, i);
  for (int j = 0; j <= degree_bound - n; ++j) put(g, j);
  return a;
}

/// Generator of (ideal restricted to degree <= D) intersected with Z, i.e.
/// the pivot of the HNF row supported only on the constant column.
inline std::optional<Integer> lattice_constant(const IntPoly& f, const IntPoly& g,
                                               int degree_bound) {
  const IntMatrix h = hermite_normal_form(shifted_multiples_matrix(f, g, degree_bound));
  const std::size_t last = h.cols() - 1;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool only_constant = sgn(h(i, last)) != 0;
    for (std::size_t j = 0; j < last && only_constant; ++j) only_constant = sgn(h(i, j)) == 0;
    if (only_constant) return h(i, last);
  }
  return std::nullopt;
}

struct LatticeDeepening {
  std::optional<Integer> r;  // empty when not stabilized
  int degree_bound = 0;      // last D examined
  bool stabilized() const { return r.has_value(); }
};

/// Raises D from max(m, n) until r_D has been unchanged for max(m, n)
/// consecutive increments and (when given) equals `agree_with`. Gives up
/// at D = m + n + 32.
inline LatticeDeepening reduced_resultant_hnf(const IntPoly& f, const IntPoly& g,
                                              const std::optional<Integer>& agree_with) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 1 || n < 1) throw DegreeError("reduced_resultant_hnf: both polynomials need positive degree");
  const int window = std::max(m, n);
  const int cap = m + n + 32;
  std::optional<Integer> prev;
  int unchanged = 0;
  LatticeDeepening out;
  for (int D = window; D <= cap; ++D) {
    std::optional<Integer> cur = lattice_constant(f, g, D);
    unchanged = (cur && prev && *cur == *prev) ? unchanged + 1 : 0;
    prev = cur;
    out.degree_bound = D;
    if (cur && unchanged >= window && (!agree_with || *agree_with == *cur)) {
      out.r = cur;
      return out;
    }
  }
  return out;
}

}  // namespace bezres
