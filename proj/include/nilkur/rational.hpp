#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilkur {

/// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" (no whitespace). Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') ++i;
  bool seen_slash = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  std::string s(text.front() == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (seen_slash && q.get_den() == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace nilkur
