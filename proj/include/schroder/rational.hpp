#pragma once

#include <gmpxx.h>

#include <string>

#include "schroder/errors.hpp"

namespace schroder {

// Exact arbitrary-precision rational. All coefficient arithmetic in the
// library goes through this alias; no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Canonical "p/q" form with the denominator always spelled out ("3/1", "-2/5").
inline std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r{Integer(text)};
      return r;
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw DomainError("rational with zero denominator: " + text);
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational \"" + text + "\"", 0);
  }
}

inline Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Integer catalan(unsigned n) {
  return binomial(2 * n, n) / Integer(n + 1);
}

}  // namespace schroder
