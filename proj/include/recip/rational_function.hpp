#pragma once

#include <string>
#include <string_view>

#include "recip/laurent.hpp"

namespace recip {

/// Quotient num/den of Laurent polynomials of the same rank.
///
/// Every value is stored normalized: a common monomial factor is pulled out
/// so both parts are honest polynomials whose exponents have coordinatewise
/// minimum zero across num and den. In rank 1 the pair is additionally
/// reduced by the polynomial gcd and den is made monic, which makes the
/// representation canonical. Higher ranks only scale den to leading
/// coefficient 1 and collapse num = c*den; equality is always decided by
/// cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(LaurentPolynomial num);
  /// Throws std::domain_error when den is zero.
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  static RationalFunction constant(std::size_t rank, const Rational& c);

  const LaurentPolynomial& num() const { return num_; }
  const LaurentPolynomial& den() const { return den_; }
  std::size_t rank() const { return num_.rank(); }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value is a Laurent polynomial (den a monomial).
  bool is_laurent() const { return den_.is_monomial(); }
  /// Requires is_laurent().
  LaurentPolynomial as_laurent() const;
  /// True when the value is a constant in Q; sets *value when given.
  bool is_constant(Rational* value = nullptr) const;

  RationalFunction inverse() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// a/b == c/d iff a*d == c*b.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  struct Normalized {};
  RationalFunction(Normalized, LaurentPolynomial num, LaurentPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

/// "num" when den is 1, otherwise "(num)/(den)".
std::string to_string(const RationalFunction& r, std::string_view var = "X");

}  // namespace recip
