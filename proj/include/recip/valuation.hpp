#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "recip/exponent.hpp"
#include "recip/laurent.hpp"
#include "recip/rational_function.hpp"

namespace recip {

/// Value group element of the lex valuation, or infinity (the value of 0).
class ValuationValue {
 public:
  static ValuationValue infinity() { return ValuationValue(); }
  explicit ValuationValue(Exponent value) : value_(std::move(value)) {}

  bool is_infinite() const { return !value_.has_value(); }
  /// Requires a finite value.
  const Exponent& value() const;

  friend ValuationValue operator+(const ValuationValue& a, const ValuationValue& b);
  friend bool operator==(const ValuationValue&, const ValuationValue&) = default;
  /// Infinity compares above every finite value.
  friend std::strong_ordering operator<=>(const ValuationValue& a, const ValuationValue& b);

  std::string to_string() const;

 private:
  ValuationValue() = default;
  std::optional<Exponent> value_;
};

/// v(p/q) = lex-min exponent of p minus lex-min exponent of q.
ValuationValue lex_valuation(const RationalFunction& r);

/// v(r) >= 0 in lex order, i.e. r lies in the localization of the full
/// positive cone algebra at its monomial maximal ideal.
bool in_valuation_ring(const RationalFunction& r);

/// Euclidean function on K[y]: the degree, which is v(1/a) for the
/// valuation at infinity. Rejects zero and non-polynomials.
std::int64_t euclid_f(const LaurentPolynomial& a);

struct EuclideanDivision {
  LaurentPolynomial quotient;
  LaurentPolynomial remainder;
};

/// a = b*q + r with r = 0 or deg r < deg b. The quotient is built by
/// expanding a and b in powers of 1/y around their leading terms and solving
/// for the coefficients of q one at a time; no polynomial long division is
/// used. Rejects b = 0.
EuclideanDivision euclid_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace recip
