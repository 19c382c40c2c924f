#pragma once

#include <gmpxx.h>

#include <string>

#include "treq/errors.hpp"

namespace treq {

// Exact arbitrary-precision arithmetic. gmpxx keeps rationals canonical
// (reduced, positive denominator) after every operation via canonicalize.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q" with q omitted when 1, matching mpq_class's canonical printing.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("rational_from_string: bad syntax: " + s);
  r.canonicalize();
  return r;
}

}  // namespace treq
