#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "trifol/errors.hpp"

namespace trifol {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt floor_rat(const Rational& r) {
  BigInt n = rat_num(r);
  BigInt d = rat_den(r); // always positive
  BigInt q = n / d;      // truncated toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

// Fractional part in [0, 1).
inline Rational frac_rat(const Rational& r) { return r - Rational(floor_rat(r)); }

inline std::string rat_str(const Rational& r) { return r.str(); }

// Parses "p/q" or "p" with optional sign. Throws SyntaxError on malformed input.
inline Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int(text)) throw SyntaxError("bad rational: '" + text + "'");
    return Rational(BigInt(text));
  }
  std::string p = text.substr(0, slash);
  std::string q = text.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw SyntaxError("bad rational: '" + text + "'");
  BigInt den(q);
  if (den == 0) throw SyntaxError("zero denominator in rational: '" + text + "'");
  return Rational(BigInt(p), den);
}

} // namespace trifol
