#pragma once

#include <gmpxx.h>

#include <string>

namespace avoidance {

// Arbitrary precision integers and rationals. mpq_class values are kept
// canonical (lowest terms, positive denominator) by every operation here.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

// Always "p/q", including integers ("3/1").
inline std::string to_fraction(const Rational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

// "p" for integers, "p/q" otherwise.
inline std::string to_compact(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return to_fraction(value);
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace avoidance
