#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recip/rational_function.hpp"
#include "recip/reciprocal_sum.hpp"
#include "recip/semigroup.hpp"

namespace recip {

struct WitnessSearchBounds {
  std::size_t max_terms = 3;
  std::int64_t max_degree = 12;
  std::vector<Rational> coeff_pool{Rational(1), Rational(-1), Rational(2),
                                   Rational(-2), Rational(1, 2), Rational(-1, 2)};
  std::uint64_t seed = 1;
  /// Number of prefixes tried by the exhaustive phase.
  std::size_t exhaustive_budget = 5000;
  /// Number of random prefixes tried afterwards.
  std::size_t random_trials = 2000;
};

/// Looks for denominators d_i in K[S] (support in S, degree <= max_degree,
/// coefficients from the pool, at most max_terms of them) whose reciprocals
/// sum to r.
///
/// Candidate order: first r itself as a single reciprocal; then, by
/// increasing prefix length k, every nondecreasing k-tuple over the
/// candidate list (monomials, then binomials, each ordered by support and
/// pool index) completed by the unique last denominator 1/(r - prefix);
/// then seeded random prefixes of up to three-term denominators. The first
/// hit in this order is returned, so results are reproducible.
///
/// nullopt means "none found within bounds"; it is not a proof of
/// non-membership.
std::optional<ReciprocalSum> brute_force_witness(const RationalFunction& r, const NumericalSemigroup& s,
                                                 const WitnessSearchBounds& bounds);

}  // namespace recip
