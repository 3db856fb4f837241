#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "recip/exponent.hpp"
#include "recip/rational.hpp"

namespace recip {

/// Sparse polynomial over Q with exponents in Z^N. Zero coefficients are
/// never stored and terms iterate in ascending lex order of exponents.
class LaurentPolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit LaurentPolynomial(std::size_t rank);
  static LaurentPolynomial constant(std::size_t rank, const Rational& c);
  static LaurentPolynomial monomial(const Exponent& e, const Rational& c = 1);
  /// Rank-1 polynomial c_0 + c_1 X + ... from a dense coefficient list.
  static LaurentPolynomial from_dense(const std::vector<Rational>& coeffs);

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const { return coefficient(Exponent(rank_)); }
  std::vector<Exponent> support() const;

  // Both require a nonzero polynomial.
  const Exponent& lex_min() const;
  const Exponent& lex_max() const;
  const Rational& trailing_coefficient() const;
  const Rational& leading_coefficient() const;

  /// Coordinatewise minimum over the support; requires nonzero.
  Exponent min_corner() const;
  /// True if every exponent has nonnegative coordinates.
  bool is_polynomial() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }

  LaurentPolynomial pow(unsigned k) const;
  /// Multiplies by the monomial X^e.
  LaurentPolynomial shifted(const Exponent& e) const;
  /// Applies an exponent map to every term; terms that collide are added.
  LaurentPolynomial map_exponents(const std::function<Exponent(const Exponent&)>& f) const;
  /// Keeps the terms whose exponent satisfies the predicate.
  LaurentPolynomial filter(const std::function<bool(const Exponent&)>& keep) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Exponent& e, const Rational& c);

  std::size_t rank_;
  Terms terms_;
};

/// Renders with ASCII operators, e.g. "1 + 2*X^3 - 1/2*X^(1,-2)". Rank 1
/// uses `var^k`, higher ranks use `var^(a,b,...)`. The output re-parses.
std::string to_string(const LaurentPolynomial& p, std::string_view var = "X");

}  // namespace recip
