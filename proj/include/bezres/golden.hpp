#pragma once

/**
 * @file golden.hpp
 * @brief The six worked pairs with known (B, r, R), replayed as a self-check.
 */

#include <string>
#include <vector>

#include "bezres/parse.hpp"
#include "bezres/relations.hpp"

namespace bezres {

struct GoldenExample {
  std::string f;
  std::string g;
  long B;
  long r;
  long R;
};

inline std::vector<GoldenExample> golden_examples() {
  return {
      {"6x^3 - 6x^2 - 6x - 6", "6x^3 - 6x^2 - 6x + 5", 11, 11, 287496},
      {"6x^2 + 5", "6x^2 - 4x + 1", 22, 11, 1056},
      {"2x^3 + 3x^2 - 2", "3x - 3", 9, 9, 81},
      {"2x^3 + x^2 - 3x + 2", "4x - 2", 2, 2, 64},
      {"2x^3 - x^2 - x", "x^3 - x^2 + x + 1", 2, 2, 2},
      {"2x^3 + x^2 - x - 1", "x^3 - x^2 + x + 1", 3, 3, 27},
  };
}

struct GoldenOutcome {
  GoldenExample expected;
  Integer B, r, R;
  bool checks_hold = false;  // every divisibility/corollary check
  bool pass = false;
};

inline std::vector<GoldenOutcome> run_golden(const std::vector<GoldenExample>& examples) {
  std::vector<GoldenOutcome> out;
  for (const auto& ex : examples) {
    const TripleReport t = triple_report(parse_poly(ex.f), parse_poly(ex.g));
    GoldenOutcome o{ex, t.B, t.r, t.R};
    o.checks_hold = true;
    for (const auto& c : verify_all(t)) o.checks_hold = o.checks_hold && c.holds;
    o.pass = o.checks_hold && t.B == ex.B && t.r == ex.r && t.R == ex.R;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace bezres
