#pragma once

// Exact rational scalars. Every computation in this library is exact, so
// mpq_class is the only numeric type that crosses public interfaces.
// Arbitrary precision matters: fraction-free elimination and the cutoff
// powers used by the extension operators overflow 64-bit integers quickly.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace pwcoh {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" with an optional leading minus, nothing else.
inline std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) return std::nullopt;
  bool seen_slash = false;
  std::size_t digits_before = 0, digits_after = 0;
  for (; i < text.size(); ++i) {
    if (text[i] == '/' && !seen_slash && digits_before > 0) {
      seen_slash = true;
    } else if (text[i] >= '0' && text[i] <= '9') {
      (seen_slash ? digits_after : digits_before)++;
    } else {
      return std::nullopt;
    }
  }
  if (digits_before == 0 || (seen_slash && digits_after == 0)) return std::nullopt;
  Rational r;
  if (r.set_str(text, 10) != 0) return std::nullopt;
  if (r.get_den() == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace pwcoh
