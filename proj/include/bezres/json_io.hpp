#pragma once

/**
 * @file json_io.hpp
 * @brief JSON documents for triple reports and check outcomes.
 *
 * Arbitrary-size integers are written as decimal strings; integer
 * polynomials in the human grammar; rational polynomials as a coefficient
 * list, highest degree first.
 */

#include <vector>

#include <nlohmann/json.hpp>

#include "bezres/parse.hpp"
#include "bezres/relations.hpp"

namespace bezres {

inline nlohmann::json to_json(const TripleReport& t) {
  return {
      {"f", format_poly(t.f)},
      {"g", format_poly(t.g)},
      {"m", t.m},
      {"n", t.n},
      {"d", t.d.get_str()},
      {"B", t.B.get_str()},
      {"r", t.r.get_str()},
      {"R", t.R.get_str()},
      {"k_min", t.k_min},
      {"j", t.j},
      {"bezout",
       {{"p", format_rat_coeff_list(t.bezout.p)},
        {"q", format_rat_coeff_list(t.bezout.q)},
        {"Bp", format_poly(t.bezout.Bp)},
        {"Bq", format_poly(t.bezout.Bq)}}},
      {"resultant",
       {{"pbar", format_poly(t.res_cert.pbar)},
        {"qbar", format_poly(t.res_cert.qbar)},
        {"sign", t.res_cert.res_sign}}},
      {"reduced", {{"p", format_poly(t.red_cert.p)}, {"q", format_poly(t.red_cert.q)}}},
  };
}

inline nlohmann::json to_json(const CheckOutcome& c) {
  return {{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}};
}

inline nlohmann::json to_json(const std::vector<CheckOutcome>& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cs) arr.push_back(to_json(c));
  return arr;
}

}  // namespace bezres
