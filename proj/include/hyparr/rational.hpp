#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "hyparr/errors.hpp"

namespace hyparr {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses `p` or `p/q` with an optional sign. Throws ParseError on anything else.
inline Rat parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Int p(n, 10);
  Int q = slash == std::string_view::npos ? Int(1) : Int(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

/// Least common multiple of the denominators.
template <class Range>
Int common_denominator(const Range& values) {
  Int l = 1;
  for (const Rat& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace hyparr
