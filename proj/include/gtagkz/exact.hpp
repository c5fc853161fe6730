#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "exponent.hpp"

namespace gtagkz {

using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(long k) {
  if (k < 0) throw std::domain_error("factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

/// x! = prod_i x_i! for a nonnegative vector.
inline Integer factorial(const ExponentVector& x) {
  Integer out = 1;
  for (long v : x.entries()) out *= factorial(v);
  return out;
}

inline Integer factorial(const MultiIndex& s) {
  Integer out = 1;
  for (long v : s) out *= factorial(v);
  return out;
}

/// (t+1)(t+2)...(t+s); 1 when s == 0.
inline Integer rising_from(long t, long s) {
  Integer out = 1;
  for (long i = 1; i <= s; ++i) out *= (t + i);
  return out;
}

/// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace gtagkz
