#include <gtest/gtest.h>

#include "generators.hpp"
#include "recip/dimension.hpp"
#include "recip/fourier_motzkin.hpp"

namespace recip {
namespace {

using testgen::Gen;

LexMonoid n2() { return LexMonoid::orthant(2); }
LexMonoid example_family() { return LexMonoid(2, {}, {{Exponent{1, 0}, {1}}}); }

// Recomputes the witness element from its multiplicities and checks that it
// lies in the stratum.
void check_witness(const LexMonoid& m, std::size_t i, const StratumWitness& w) {
  std::vector<Integer> e(m.rank(), 0);
  for (std::size_t g = 0; g < m.generators().size(); ++g) {
    ASSERT_GE(w.generator_multiplicities[g], 0);
    for (std::size_t c = 0; c < m.rank(); ++c) e[c] += w.generator_multiplicities[g] * m.generators()[g][c];
  }
  for (std::size_t f = 0; f < m.families().size(); ++f) {
    const auto& fam = m.families()[f];
    const Integer& k = w.family_multiplicities[f];
    ASSERT_GE(k, 0);
    if (k == 0) {
      ASSERT_TRUE(w.family_shifts[f].empty());
      continue;
    }
    for (std::size_t c = 0; c < m.rank(); ++c) e[c] += k * fam.base[c];
    ASSERT_EQ(w.family_shifts[f].size(), fam.free_coords.size());
    for (std::size_t s = 0; s < fam.free_coords.size(); ++s) e[fam.free_coords[s]] += w.family_shifts[f][s];
  }
  for (std::size_t c = 0; c < m.rank(); ++c) ASSERT_EQ(e[c], w.element[c]);
  for (std::size_t c = 0; c + 1 < i; ++c) ASSERT_EQ(w.element[c], 0);
  ASSERT_GT(w.element[i - 1], 0);
}

TEST(FourierMotzkin, SmallSystems) {
  FourierMotzkin fm(2);
  fm.add_ge({1, 0}, 1);
  fm.add_ge({0, 1}, 1);
  fm.add_le({1, 1}, 3);
  const auto x = fm.solve();
  ASSERT_TRUE(x.has_value());
  EXPECT_GE((*x)[0], 1);
  EXPECT_GE((*x)[1], 1);
  EXPECT_LE((*x)[0] + (*x)[1], 3);

  FourierMotzkin bad(2);
  bad.add_ge({1, 1}, 3);
  bad.add_le({1, 0}, 1);
  bad.add_le({0, 1}, 1);
  EXPECT_FALSE(bad.solve().has_value());

  FourierMotzkin eq(3);
  eq.add_eq({1, -2, 0}, 0);
  eq.add_eq({0, 1, -3}, 0);
  eq.add_ge({0, 0, 1}, Rational(1, 2));
  const auto y = eq.solve();
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ((*y)[0], 2 * (*y)[1]);
  EXPECT_EQ((*y)[1], 3 * (*y)[2]);
}

TEST(FourierMotzkin, RandomSolutionsSatisfyConstraints) {
  Gen g(51);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.uniform(1, 4));
    FourierMotzkin fm(n);
    std::vector<std::pair<std::vector<Rational>, Rational>> rows;
    const auto k = g.uniform(1, 6);
    for (std::int64_t r = 0; r < k; ++r) {
      std::vector<Rational> a(n);
      for (auto& c : a) c = Rational(g.uniform(-3, 3));
      const Rational b(g.uniform(-4, 4));
      fm.add_le(a, b);
      rows.emplace_back(a, b);
    }
    const auto x = fm.solve();
    if (!x) continue;
    for (const auto& [a, b] : rows) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += a[j] * (*x)[j];
      ASSERT_LE(lhs, b);
    }
  }
}

TEST(Strata, Examples) {
  EXPECT_TRUE(si_nonempty(n2(), 1));
  EXPECT_TRUE(si_nonempty(n2(), 2));
  EXPECT_TRUE(si_nonempty(example_family(), 1));
  EXPECT_FALSE(si_nonempty(example_family(), 2));
  EXPECT_THROW(si_nonempty(n2(), 0), std::out_of_range);
  EXPECT_THROW(si_nonempty(n2(), 3), std::out_of_range);
}

TEST(Strata, GeneratorCombinationsReachLaterStrata) {
  const LexMonoid m(3, {Exponent{1, 3, 0}, Exponent{0, 2, -1}, Exponent{0, 0, 4}});
  EXPECT_TRUE(si_nonempty(m, 1));
  EXPECT_TRUE(si_nonempty(m, 2));
  EXPECT_TRUE(si_nonempty(m, 3));
  // Both generators have a positive first coordinate, so nothing lands in S_2.
  const LexMonoid only_first(2, {Exponent{1, -5}, Exponent{2, 7}});
  EXPECT_FALSE(si_nonempty(only_first, 2));
}

TEST(Strata, WitnessesRecheck) {
  Gen g(52);
  for (int t = 0; t < 80; ++t) {
    const std::size_t rank = static_cast<std::size_t>(g.uniform(1, 3));
    std::vector<Exponent> gens;
    for (int k = 0; k < g.uniform(0, 3); ++k) {
      auto e = g.exponent(rank, -3, 3);
      if (e.is_zero()) continue;
      if (!e.lex_positive()) e = -e;
      gens.push_back(e);
    }
    std::vector<MonoidFamily> fams;
    if (rank > 1 && g.coin()) {
      const std::size_t lead = static_cast<std::size_t>(g.uniform(0, static_cast<std::int64_t>(rank) - 2));
      auto base = Exponent::unit(rank, lead);
      fams.push_back({base, {rank - 1}});
    }
    if (gens.empty() && fams.empty()) gens.push_back(Exponent::unit(rank, 0));
    const LexMonoid m(rank, gens, fams);
    for (std::size_t i = 1; i <= rank; ++i) {
      if (auto w = stratum_witness(m, i)) check_witness(m, i, *w);
    }
  }
}

TEST(Dimension, GoldenReports) {
  const auto a = dimension_report(n2());
  EXPECT_EQ(a.exact, 2U);
  EXPECT_EQ(a.exact_source, ExactSource::AllNonempty);

  const auto family = build_kplusm_monoid(2, 1);
  EXPECT_EQ(family.rank(), 2U);
  EXPECT_EQ(family.families(), example_family().families());
  const auto b = dimension_report(family);
  EXPECT_EQ(b.exact, 1U);
  EXPECT_EQ(b.exact_source, ExactSource::KPlusMFamily);
  EXPECT_EQ(b.empty_strata, 1U);

  const auto c = dimension_report(build_kplusm_monoid(4, 2));
  EXPECT_EQ(c.empty_strata, 2U);
  EXPECT_EQ(c.exact, 2U);
  EXPECT_EQ(c.si_nonempty, (std::vector<bool>{true, true, false, false}));

  const auto d = dimension_report(build_kplusm_monoid(3, 2));
  EXPECT_EQ(d.empty_strata, 1U);
  EXPECT_EQ(d.exact, 2U);

  const auto e = dimension_report(LexMonoid::from_numerical(NumericalSemigroup::create({4, 7, 9})));
  EXPECT_EQ(e.exact, 1U);
  EXPECT_EQ(e.exact_source, ExactSource::Rank1);

  EXPECT_THROW(build_kplusm_monoid(2, 2), std::invalid_argument);
  EXPECT_THROW(build_kplusm_monoid(3, 0), std::invalid_argument);
}

TEST(Dimension, IntervalWhenNoRuleApplies) {
  // S_2 empty but not the Y X^k family shape.
  const LexMonoid m(2, {Exponent{1, 0}}, {{Exponent{2, 0}, {1}}});
  const auto r = dimension_report(m);
  EXPECT_EQ(r.lower, 1U);
  EXPECT_EQ(r.upper, 2U);
  EXPECT_FALSE(r.exact.has_value());
}

TEST(Dimension, FullCone) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = dimension_report(LexMonoid::full_cone(n));
    EXPECT_EQ(r.empty_strata, 0U);
    EXPECT_EQ(r.exact, n);
  }
}

TEST(Dimension, ReportInvariants) {
  Gen g(53);
  for (int t = 0; t < 80; ++t) {
    const std::size_t rank = static_cast<std::size_t>(g.uniform(1, 4));
    std::vector<Exponent> gens;
    for (int k = 0; k < 3; ++k) {
      auto e = g.exponent(rank, -2, 2);
      if (e.is_zero()) continue;
      if (!e.lex_positive()) e = -e;
      gens.push_back(e);
    }
    if (gens.empty()) gens.push_back(Exponent::unit(rank, rank - 1));
    const LexMonoid m(rank, gens);
    const auto r = dimension_report(m);
    ASSERT_LE(r.lower, r.upper);
    ASSERT_EQ(r.lower, r.rank - r.empty_strata);
    if (r.exact) {
      ASSERT_GE(*r.exact, r.lower);
      ASSERT_LE(*r.exact, r.rank);
    }
    // Adding a generator never empties a stratum.
    auto extra = g.exponent(rank, -2, 2);
    if (extra.is_zero()) continue;
    if (!extra.lex_positive()) extra = -extra;
    const auto bigger = dimension_report(m.with_generator(extra));
    for (std::size_t i = 0; i < rank; ++i) {
      if (r.si_nonempty[i]) ASSERT_TRUE(bigger.si_nonempty[i]);
    }
  }
}

TEST(Monoid, Validation) {
  EXPECT_THROW(LexMonoid(2, {Exponent{0, -1}}), std::invalid_argument);
  EXPECT_THROW(LexMonoid(2, {Exponent{1, 0, 0}}), std::invalid_argument);
  EXPECT_THROW(LexMonoid(2, {}, {{Exponent{0, 1}, {0}}}), std::invalid_argument);
  EXPECT_THROW(LexMonoid(2, {}, {{Exponent{1, 0}, {2}}}), std::invalid_argument);
  EXPECT_THROW(LexMonoid(0, {}), std::invalid_argument);
}

TEST(Noetherian, Flags) {
  EXPECT_TRUE(reciprocal_noetherian(LexMonoid::from_numerical(NumericalSemigroup::create({4, 7, 9}))));
  EXPECT_FALSE(reciprocal_noetherian(n2()));
  EXPECT_TRUE(reciprocal_noetherian(LexMonoid::from_numerical(NumericalSemigroup::create({1}))));
  EXPECT_FALSE(reciprocal_noetherian(example_family()));
}

}  // namespace
}  // namespace recip
