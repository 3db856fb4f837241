#include <gtest/gtest.h>

#include "generators.hpp"
#include "recip/egyptian.hpp"
#include "recip/membership.hpp"
#include "recip/sigma.hpp"
#include "recip/upoly.hpp"

namespace recip {
namespace {

using testgen::Gen;

std::vector<Integer> Z(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TEST(Greedy, Examples) {
  EXPECT_EQ(greedy_egyptian(Rational(1, 2)).denominators, Z({2}));
  EXPECT_EQ(greedy_egyptian(Rational(5, 6)).denominators, Z({2, 3}));
  EXPECT_EQ(greedy_egyptian(Rational(4, 5)).denominators, Z({2, 4, 20}));
  EXPECT_EQ(greedy_egyptian(Rational(1)).denominators, Z({1}));
  EXPECT_EQ(greedy_egyptian(Rational(4, 13)).denominators, Z({4, 18, 468}));
}

TEST(Greedy, RejectsOutOfRange) {
  EXPECT_THROW(greedy_egyptian(Rational(0)), std::invalid_argument);
  EXPECT_THROW(greedy_egyptian(Rational(-1, 3)), std::invalid_argument);
  EXPECT_THROW(greedy_egyptian(Rational(7, 6)), std::invalid_argument);
}

TEST(Greedy, AllSmallDenominators) {
  for (long q = 1; q <= 60; ++q) {
    for (long p = 1; p <= q; ++p) {
      if (gcd(Integer(p), Integer(q)) != 1) continue;
      const Rational r(p, q);
      const auto rep = greedy_egyptian(r);
      Rational sum = 0;
      for (std::size_t i = 0; i < rep.denominators.size(); ++i) {
        sum += Rational(Integer(1), rep.denominators[i]);
        if (i > 0) ASSERT_LT(rep.denominators[i - 1], rep.denominators[i]);
        if (i > 0) ASSERT_LT(rep.remainder_numerators[i], rep.remainder_numerators[i - 1]);
      }
      ASSERT_EQ(sum, r) << p << "/" << q;
    }
  }
}

TEST(EgyptianElement, Examples) {
  EXPECT_TRUE(is_egyptian_element(LaurentPolynomial::constant(1, 7)));
  EXPECT_FALSE(is_egyptian_element(LaurentPolynomial::monomial(Exponent{4})));
  EXPECT_FALSE(is_egyptian_element(LaurentPolynomial(1)));
  EXPECT_THROW(is_egyptian_element(LaurentPolynomial::monomial(Exponent{-1})), std::invalid_argument);
}

TEST(EgyptianElement, MatchesUnitDetection) {
  Gen g(71);
  const SemigroupMembership m(NumericalSemigroup::create({4, 7, 9}));
  for (int t = 0; t < 100; ++t) {
    const auto f = g.coin() ? LaurentPolynomial::constant(1, g.nonzero_rational())
                            : g.semigroup_element(m.semigroup(), 14);
    const auto image = sigma_of_reciprocal(f);
    const bool unit = m.decide(image).is_member() && m.decide(image.inverse()).is_member();
    ASSERT_EQ(is_egyptian_element(f), unit) << to_string(f);
  }
}

// Remainder of a polynomial in x modulo the minimal polynomial.
UPoly reduce(const UPoly& p, const std::vector<Rational>& minpoly) {
  return UPoly::divmod(p, UPoly(minpoly)).second;
}

TEST(AlgebraicReciprocal, Examples) {
  EXPECT_EQ(algebraic_reciprocal({-2, 0, 1}), (std::vector<Rational>{0, Rational(1, 2)}));
  EXPECT_EQ(algebraic_reciprocal({-3, 1}), (std::vector<Rational>{Rational(1, 3)}));
  EXPECT_EQ(algebraic_reciprocal({1, 1, 1}), (std::vector<Rational>{-1, -1}));
  EXPECT_THROW(algebraic_reciprocal({0, 1}), std::invalid_argument);
  EXPECT_THROW(algebraic_reciprocal({1, 0}), std::invalid_argument);
}

TEST(AlgebraicReciprocal, InvertsModuloTheMinimalPolynomial) {
  Gen g(72);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> minpoly(static_cast<std::size_t>(g.uniform(1, 5)) + 1);
    for (auto& c : minpoly) c = g.rational();
    minpoly.front() = g.nonzero_rational();
    minpoly.back() = g.nonzero_rational();
    const UPoly inv(algebraic_reciprocal(minpoly));
    const UPoly x(std::vector<Rational>{0, 1});
    ASSERT_EQ(reduce(x * inv, minpoly), UPoly(std::vector<Rational>{1}));
  }
}

}  // namespace
}  // namespace recip
