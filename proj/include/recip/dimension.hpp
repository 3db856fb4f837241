#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "recip/exponent.hpp"
#include "recip/rational.hpp"
#include "recip/semigroup.hpp"

namespace recip {

/// The set { base + sum_{c in free_coords} k_c e_c : k_c in Z }. Free
/// coordinates are 0-based and must all come after the leading nonzero
/// coordinate of the base, so every member is lex-positive.
struct MonoidFamily {
  Exponent base;
  std::vector<std::size_t> free_coords;

  friend bool operator==(const MonoidFamily&, const MonoidFamily&) = default;
};

/// Submonoid of (Z^N, lex) generated by finitely many lex-positive vectors
/// and finitely many families.
class LexMonoid {
 public:
  /// Throws std::invalid_argument on a rank mismatch, a generator or base
  /// that is not lex-positive, or a misplaced free coordinate.
  LexMonoid(std::size_t rank, std::vector<Exponent> generators, std::vector<MonoidFamily> families = {});

  static LexMonoid from_numerical(const NumericalSemigroup& s);
  /// N^N with the unit vectors as generators.
  static LexMonoid orthant(std::size_t rank);
  /// Every lex-nonnegative vector of Z^N.
  static LexMonoid full_cone(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  const std::vector<MonoidFamily>& families() const { return families_; }

  LexMonoid with_generator(Exponent g) const;

 private:
  std::size_t rank_;
  std::vector<Exponent> generators_;
  std::vector<MonoidFamily> families_;
};

/// An explicit integer element of the stratum S_i together with how it is
/// assembled: multiplicities of generators and families, and the total
/// shift applied along each family's free coordinates.
struct StratumWitness {
  Exponent element;
  std::vector<Integer> generator_multiplicities;
  std::vector<Integer> family_multiplicities;
  std::vector<std::vector<Integer>> family_shifts;  // parallel to free_coords
};

/// Searches for a monoid element whose coordinates before i vanish and whose
/// i-th coordinate is positive (i is 1-based). Each subset of families is
/// tried as an exact rational feasibility problem; a rational solution is
/// scaled to an integer one and re-checked before it is returned.
std::optional<StratumWitness> stratum_witness(const LexMonoid& m, std::size_t i);
bool si_nonempty(const LexMonoid& m, std::size_t i);

enum class ExactSource {
  AllNonempty,   // every stratum nonempty: dimension equals the rank
  KPlusMFamily,  // the Y_j X_i^k family: dimension equals the number of Y's
  Rank1,
};
std::string_view to_string(ExactSource s);

struct DimensionReport {
  std::size_t rank = 0;
  std::vector<bool> si_nonempty;
  std::size_t empty_strata = 0;  // t
  std::size_t lower = 0;         // rank - t
  std::size_t upper = 0;         // rank
  std::optional<std::size_t> exact;
  std::optional<ExactSource> exact_source;
};

/// Krull dimension of the reciprocal complement of K[M]: always the interval
/// [rank - t, rank], and an exact value only when a known result applies.
DimensionReport dimension_report(const LexMonoid& m);

/// Rank-n monoid generated by Y_j X_i^k (k in Z) with coordinates ordered
/// Y_1..Y_m, X_{m+1}..X_n; one family per (j, i). Requires n > m >= 1.
LexMonoid build_kplusm_monoid(std::size_t n, std::size_t m);

/// The m for which `monoid` equals build_kplusm_monoid(rank, m), if any.
std::optional<std::size_t> match_kplusm_monoid(const LexMonoid& monoid);

/// Whether the reciprocal complement of K[M] is Noetherian: exactly when
/// K[M] is Noetherian of dimension at most one, i.e. no family has free
/// coordinates and the generated group has rank <= 1.
bool reciprocal_noetherian(const LexMonoid& m);

}  // namespace recip
