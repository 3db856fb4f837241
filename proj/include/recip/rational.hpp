#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace recip {

/// Exact rational over arbitrary-precision integers. GMP keeps mpq_class
/// canonical (reduced, positive denominator) after every arithmetic op;
/// make_rational() canonicalizes values built from a numerator/denominator pair.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" with an optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Least common multiple of the denominators, 1 for an empty range.
template <typename Range>
Integer common_denominator(const Range& values) {
  Integer l = 1;
  for (const Rational& q : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return l;
}

}  // namespace recip
