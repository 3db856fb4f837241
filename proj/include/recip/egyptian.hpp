#pragma once

#include <vector>

#include "recip/laurent.hpp"
#include "recip/rational.hpp"

namespace recip {

/// Distinct unit fractions 1/d_1 + ... + 1/d_k with d_1 < ... < d_k.
struct EgyptianRepresentation {
  std::vector<Integer> denominators;
  /// Numerator of the remainder before each step; strictly decreasing,
  /// which is why the greedy loop terminates.
  std::vector<Integer> remainder_numerators;
};

/// Fibonacci-Sylvester greedy expansion: repeatedly subtract the largest
/// unit fraction not exceeding the remainder. Requires 0 < r <= 1.
EgyptianRepresentation greedy_egyptian(const Rational& r);

/// True iff f is a nonzero constant: the only elements of a semigroup
/// algebra K[S] (S not a group) whose reciprocals sum up to everything.
/// Requires every exponent of f to be lex-nonnegative.
bool is_egyptian_element(const LaurentPolynomial& f);

/// Given the minimal polynomial a_0 + a_1 t + ... + a_c t^c of x, returns
/// b_0..b_{c-1} with 1/x = b_0 + b_1 x + ... + b_{c-1} x^{c-1}, namely
/// b_{i-1} = -a_i / a_0. Requires a_0 != 0 and a_c != 0.
std::vector<Rational> algebraic_reciprocal(const std::vector<Rational>& minpoly);

}  // namespace recip
