#pragma once

#include <gmpxx.h>

#include <string>

#include "imprim/errors.hpp"

namespace imprim {

// Exact rational numbers. mpq_class already maintains the canonical form we
// require (lowest terms, positive denominator, 0 == 0/1), so the arithmetic
// is delegated wholesale; only construction and I/O need care.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p", or "p/q". Throws BadParams on malformed input.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorKind::BadParams, "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    fail(ErrorKind::BadParams, "malformed rational literal: " + s);
  if (q.get_den() == 0)
    fail(ErrorKind::BadParams, "zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace imprim
