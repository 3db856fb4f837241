#include <gtest/gtest.h>

#include "generators.hpp"
#include "recip/membership.hpp"
#include "recip/parse.hpp"
#include "recip/sigma.hpp"
#include "recip/witness_search.hpp"

namespace recip {
namespace {

using testgen::Gen;

LaurentPolynomial X(std::int64_t k, const Rational& c = 1) { return LaurentPolynomial::monomial(Exponent{k}, c); }
LaurentPolynomial C(const Rational& c) { return LaurentPolynomial::constant(1, c); }
RationalFunction P(std::string_view s) { return parse_rational_function(s, VariableScheme::univariate()); }

const NumericalSemigroup& s479() {
  static const auto s = NumericalSemigroup::create({4, 7, 9});
  return s;
}

bool supported_in(const LaurentPolynomial& f, const NumericalSemigroup& s) {
  for (const auto& [e, c] : f.terms()) {
    if (!s.contains(e[0])) return false;
  }
  return true;
}

TEST(Membership, Examples) {
  const auto ten = decide_membership(RationalFunction(X(10)), s479());
  EXPECT_TRUE(ten.is_member());
  ASSERT_TRUE(ten.certificate.has_value());
  EXPECT_FALSE(ten.obstruction.has_value());

  const auto five = decide_membership(RationalFunction(X(5)), s479());
  EXPECT_EQ(five.status, MembershipStatus::NotMember);
  EXPECT_EQ(five.obstruction, Obstruction::LinearSystemInfeasible);
  EXPECT_FALSE(five.certificate.has_value());

  const auto pole = decide_membership(P("1/X"), s479());
  EXPECT_EQ(pole.obstruction, Obstruction::PoleAtOrigin);

  const auto r = P("X^4/(X^4-1)");
  const auto v = decide_membership(r, s479());
  ASSERT_TRUE(v.is_member());
  EXPECT_EQ(*v.certificate, C(1));
  EXPECT_TRUE(verify_certificate(r, s479(), *v.certificate));
}

TEST(Membership, NeedsCertificateBeyondOne) {
  // 1 + X^3 has a gap in its support; h = 1 - X^3 + X^6 clears it.
  const auto r = P("X^4/(1 + X^3)");
  const auto v = decide_membership(r, s479());
  ASSERT_TRUE(v.is_member());
  EXPECT_NE(*v.certificate, C(1));
  EXPECT_TRUE(verify_certificate(r, s479(), *v.certificate));
  EXPECT_TRUE(verify_certificate(r, s479(), C(1) - X(3) + X(6)));
  // The X coefficient of (1 - X) h is -1 for every admissible h.
  EXPECT_EQ(decide_membership(P("1/(1-X)"), s479()).obstruction, Obstruction::LinearSystemInfeasible);
}

TEST(Membership, RejectsHigherRank) {
  const auto r = RationalFunction(LaurentPolynomial::monomial(Exponent{1, 0}));
  EXPECT_THROW(decide_membership(r, s479()), std::invalid_argument);
}

TEST(VerifyCertificate, Examples) {
  EXPECT_TRUE(verify_certificate(P("X^4/(X^4-1)"), s479(), C(1)));
  EXPECT_FALSE(verify_certificate(P("X^5"), s479(), C(1)));
  EXPECT_FALSE(verify_certificate(P("X^4"), s479(), X(4)));
  EXPECT_FALSE(verify_certificate(P("X^4"), s479(), LaurentPolynomial(1)));
}

TEST(MonomialMembership, Examples) {
  EXPECT_TRUE(monomial_membership(10, s479()));
  EXPECT_FALSE(monomial_membership(5, s479()));
  EXPECT_TRUE(monomial_membership(0, s479()));
  EXPECT_TRUE(monomial_membership(0, NumericalSemigroup::create({5, 7})));
}

TEST(MonomialMembership, AgreesWithDecision) {
  Gen g(31);
  for (int t = 0; t < 20; ++t) {
    const SemigroupMembership m(NumericalSemigroup::create(g.semigroup_generators(9)));
    for (std::int64_t e = 0; e <= 3 * m.derived().conductor(); ++e) {
      ASSERT_EQ(m.contains_monomial(e), m.decide(RationalFunction(X(e))).is_member()) << e;
    }
  }
}

TEST(ReciprocalComplement, Examples) {
  const auto sum = normalize_reciprocal_sum(ReciprocalSum({X(4) - C(1), X(7)}));
  EXPECT_TRUE(in_reciprocal_complement(sum, s479()).is_member());
  const auto n = NumericalSemigroup::create({1});
  const auto x = in_reciprocal_complement(P("X"), n);
  EXPECT_EQ(x.status, MembershipStatus::NotMember);
  EXPECT_EQ(x.obstruction, Obstruction::PoleAtOrigin);
  EXPECT_TRUE(in_reciprocal_complement(P("1/X"), n).is_member());
}

TEST(Membership, CertificatesAreSound) {
  Gen g(32);
  for (int t = 0; t < 150; ++t) {
    const SemigroupMembership m(NumericalSemigroup::create(g.semigroup_generators(9)));
    const RationalFunction r(g.laurent(1, 3, 0, 12), g.nonzero_laurent(1, 3, 0, 12));
    const auto v = m.decide(r);
    if (v.is_member()) {
      ASSERT_TRUE(m.verify(r, *v.certificate)) << to_string(r);
    } else {
      ASSERT_TRUE(v.obstruction.has_value());
    }
  }
}

TEST(Membership, TruncatedCertificateStillWorks) {
  Gen g(33);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 80; ++t) {
    const SemigroupMembership m(NumericalSemigroup::create(g.semigroup_generators(9)));
    const auto frob = m.derived().frobenius();
    const auto sum = normalize_reciprocal_sum(g.reciprocal_sum(m.semigroup(), 3, 12));
    const auto r = sigma_map(sum);
    const auto v = m.decide(r);
    ASSERT_TRUE(v.is_member());
    // Multiply by a unit of K[S'] with terms beyond the Frobenius number.
    LaurentPolynomial unit = C(1);
    for (int k = 0; k < 2; ++k) {
      const std::int64_t e = g.uniform(std::max<std::int64_t>(frob, 0) + 1, frob + 12);
      if (m.derived().contains(e)) unit += X(e, g.pool_coefficient());
    }
    const auto h = *v.certificate * unit;
    ASSERT_TRUE(m.verify(r, h));
    const std::int64_t keep = std::max<std::int64_t>(frob, 0);
    if (h.lex_max()[0] <= keep) continue;
    const auto truncated = h.filter([&](const Exponent& e) { return e[0] <= keep; });
    ASSERT_TRUE(m.verify(r, truncated)) << to_string(r) << " h=" << to_string(h);
    ++checked;
  }
  EXPECT_GE(checked, 40);
}

TEST(Membership, RandomReciprocalSumsAreMembers) {
  Gen g(34);
  for (int t = 0; t < 200; ++t) {
    const auto sum = normalize_reciprocal_sum(g.reciprocal_sum(s479(), 4, 12));
    const auto v = in_reciprocal_complement(sum, s479());
    ASSERT_TRUE(v.is_member()) << to_string(sum);
    ASSERT_TRUE(verify_certificate(sigma_map(sum), s479(), *v.certificate));
  }
}

TEST(Membership, RingClosure) {
  Gen g(35);
  const SemigroupMembership m(s479());
  for (int t = 0; t < 60; ++t) {
    const auto a = normalize_reciprocal_sum(g.reciprocal_sum(s479(), 3, 12));
    const auto b = normalize_reciprocal_sum(g.reciprocal_sum(s479(), 3, 12));
    ASSERT_TRUE(m.decide_reciprocal(a + b).is_member());
    ASSERT_TRUE(m.decide_reciprocal(a * b).is_member());
    ASSERT_TRUE(m.decide_reciprocal(a - b).is_member());
  }
}

TEST(Membership, LocalizationFastPath) {
  Gen g(36);
  for (int t = 0; t < 100; ++t) {
    const auto s = NumericalSemigroup::create(g.semigroup_generators(9));
    const SemigroupMembership m(s);
    auto q = g.semigroup_element(s, 14) + C(g.nonzero_rational());
    if (is_zero(q.constant_term())) q += C(1);
    const auto p = g.semigroup_element(s, 14);
    const RationalFunction r(p, q);
    const auto v = m.decide(r);
    ASSERT_TRUE(v.is_member());
    if (supported_in(r.num(), m.derived()) && supported_in(r.den(), m.derived())) {
      ASSERT_EQ(*v.certificate, C(1));
    }
  }
}

TEST(WitnessSearch, FindsTheObviousSum) {
  const auto r = normalize_reciprocal_sum(ReciprocalSum({X(4), X(7)}));
  const auto w = brute_force_witness(r, s479(), {});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->denominators(), (std::vector<LaurentPolynomial>{X(4), X(7)}));
}

TEST(WitnessSearch, WitnessResumsToTarget) {
  const auto r = P("1/(X^4 - X^8)");
  const auto w = brute_force_witness(r, s479(), {});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(normalize_reciprocal_sum(*w), r);
  EXPECT_TRUE(in_reciprocal_complement(r, s479()).is_member());
}

TEST(WitnessSearch, NothingFoundForNonMembers) {
  WitnessSearchBounds small;
  small.exhaustive_budget = 2000;
  small.random_trials = 300;
  for (const char* text : {"1/X^5", "X", "1/X^10 + 1/X^5", "2"}) {
    const auto r = P(text);
    if (in_reciprocal_complement(r, s479()).is_member()) continue;
    EXPECT_FALSE(brute_force_witness(r, s479(), small).has_value()) << text;
  }
}

TEST(WitnessSearch, SeededSearchIsReproducible) {
  Gen g(37);
  WitnessSearchBounds b;
  b.exhaustive_budget = 50;
  b.random_trials = 400;
  b.seed = 99;
  for (int t = 0; t < 10; ++t) {
    const auto r = normalize_reciprocal_sum(g.reciprocal_sum(s479(), 2, 9));
    const auto first = brute_force_witness(r, s479(), b);
    const auto second = brute_force_witness(r, s479(), b);
    ASSERT_EQ(first.has_value(), second.has_value());
    if (first) {
      ASSERT_EQ(first->denominators(), second->denominators());
      ASSERT_EQ(normalize_reciprocal_sum(*first), r);
    }
  }
}

}  // namespace
}  // namespace recip
