#pragma once

// Human-readable polynomial text, e.g. `2*z1*z2*z3 + z2^2*z3 - z2*z3^2`.
// Terms print in descending degrevlex order, so output is canonical.

#include <cctype>
#include <string>
#include <string_view>

#include "hyparr/poly.hpp"

namespace hyparr {

inline std::string monomial_to_string(const Monomial& m, const RingCtx& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string to_string(const Poly& f, const TermOrder& ord = TermOrder::degrevlex()) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : f.sorted_terms(ord)) {
    const bool negative = t.coeff < 0;
    const Rat mag = abs(t.coeff);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += monomial_to_string(t.monomial, *f.ring());
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, Ring ring) : s_(text), ring_(std::move(ring)) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial: " + msg + " at column " + std::to_string(pos_ + 1));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    if (e > 0xFFFF) fail("exponent too large");
    Poly out = Poly::constant(ring_, 1);
    for (unsigned long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::size_t den = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (den == pos_) fail("expected denominator");
      }
      return Poly::constant(ring_, parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Ring ring_;
};

}  // namespace detail

/// Parses a polynomial over `ring`. Accepts integers, `p/q` rationals, variable
/// names of the ring, `+ - * ^` and parentheses.
inline Poly parse_poly(std::string_view text, const Ring& ring) {
  return detail::PolyParser(text, ring).parse();
}

}  // namespace hyparr
