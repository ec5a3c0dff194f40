#pragma once

/**
 * @file parse.hpp
 * @brief Text forms of integer polynomials.
 *
 * Two grammars:
 *
 *   human:       poly := [sign] term (sign term)*
 *                term := INT | INT? 'x' ('^' UINT)?
 *                sign := '+' | '-'          (whitespace anywhere between tokens)
 *
 *   coeff list:  INT (',' INT)*             (highest degree first)
 *
 * Terms of equal degree are summed. The canonical human rendering is
 * "6x^3 - 6x^2 - 6x - 6": unit coefficients elided except on the constant
 * term, single spaces around binary signs.
 */

#include <cctype>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bezres/errors.hpp"
#include "bezres/integer.hpp"
#include "bezres/poly.hpp"

namespace bezres {

inline constexpr unsigned long kMaxExponent = 1'000'000;

enum class PolyStyle { human, coeff_list };

namespace detail {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : s_(text) {}

  IntPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    for (;;) {
      term(sign);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') {
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      }
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    std::size_t top = terms_.empty() ? 0 : terms_.rbegin()->first + 1;
    std::vector<Integer> low(top, Integer(0));
    for (auto& [e, c] : terms_) low[e] = std::move(c);
    return IntPoly::from_low_first(std::move(low));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void term(int sign) {
    const std::size_t start = pos_;
    Integer coeff = 1;
    bool have_coeff = false;
    std::string d = digits();
    if (!d.empty()) {
      coeff = Integer(d, 10);
      have_coeff = true;
      skip_ws();
    }
    unsigned long exponent = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t epos = pos_;
        std::string e = digits();
        if (e.empty()) throw ParseError("expected exponent", epos);
        if (e.size() > 7 || std::stoul(e) > kMaxExponent) {
          throw ParseError("exponent too large", epos);
        }
        exponent = std::stoul(e);
      }
    } else if (!have_coeff) {
      throw ParseError("expected term", start);
    }
    if (sign < 0) coeff = -coeff;
    terms_[exponent] += coeff;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<unsigned long, Integer> terms_;
};

inline bool is_integer_token(std::string_view t) {
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  return true;
}

inline std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

}  // namespace detail

inline IntPoly parse_poly(std::string_view text) {
  return detail::PolyScanner(text).parse();
}

struct CoeffListParse {
  IntPoly poly;
  bool leading_zeros_stripped = false;
};

inline CoeffListParse parse_coeff_list(std::string_view text) {
  if (detail::trim(text).empty()) throw ParseError("empty coefficient list", 0);
  std::vector<Integer> high;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = text.find(',', pos);
    std::string_view raw = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    std::string_view tok = detail::trim(raw);
    if (!detail::is_integer_token(tok)) {
      std::size_t at = pos + static_cast<std::size_t>(tok.empty() ? 0 : tok.data() - raw.data());
      throw ParseError("not an integer: '" + std::string(tok) + "'", at);
    }
    std::string digits(tok.front() == '+' ? tok.substr(1) : tok);
    high.emplace_back(digits, 10);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  CoeffListParse r;
  const std::size_t given = high.size();
  r.poly = IntPoly::from_high_first(std::move(high));
  const std::size_t kept = r.poly.is_zero() ? 1 : static_cast<std::size_t>(r.poly.degree() + 1);
  r.leading_zeros_stripped = given > kept;
  return r;
}

/// Either grammar: anything mentioning x is human syntax, otherwise a
/// comma marks a coefficient list, otherwise it is a constant.
inline IntPoly parse_any(std::string_view text) {
  if (text.find('x') == std::string_view::npos && text.find(',') != std::string_view::npos) {
    return parse_coeff_list(text).poly;
  }
  return parse_poly(text);
}

inline std::string format_poly(const IntPoly& p, PolyStyle style = PolyStyle::human) {
  if (p.is_zero()) return "0";
  std::string out;
  if (style == PolyStyle::coeff_list) {
    for (const auto& c : p.high_first()) {
      if (!out.empty()) out += ',';
      out += c.get_str();
    }
    return out;
  }
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& c = p[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    Integer mag = abs(c);
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

/// Rational coefficients, highest degree first, e.g. "1/2,0,-3".
inline std::string format_rat_coeff_list(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& c : p.high_first()) {
    if (!out.empty()) out += ',';
    out += c.get_str();
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << format_poly(p);
}

inline std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
  return os << '[' << format_rat_coeff_list(p) << ']';
}

}  // namespace bezres
