#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cremona {

// The coefficient field: arbitrary-precision rationals, always canonical
// (lowest terms, positive denominator). GMP keeps mpq_class canonical
// through arithmetic; the constructors below canonicalize explicitly.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

// Strict parser for "123", "-123", "3/2". Throws CremonaError(parse_error)
// on anything else, including a zero denominator.
Rational rational_from_string(std::string_view s);

std::string to_string(const Rational& r);

}  // namespace cremona
