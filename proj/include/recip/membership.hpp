#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "recip/laurent.hpp"
#include "recip/rational_function.hpp"
#include "recip/semigroup.hpp"

namespace recip {

enum class MembershipStatus { Member, NotMember };

/// Which check rejected a NotMember verdict.
enum class Obstruction {
  PoleAtOrigin,            // the reduced denominator vanishes at 0
  LinearSystemInfeasible,  // no common multiplier h exists
};

std::string_view to_string(MembershipStatus s);
std::string_view to_string(Obstruction o);

struct MembershipVerdict {
  MembershipStatus status;
  std::optional<LaurentPolynomial> certificate;  // iff Member
  std::optional<Obstruction> obstruction;        // iff NotMember

  static MembershipVerdict member(LaurentPolynomial h);
  static MembershipVerdict not_member(Obstruction o);
  bool is_member() const { return status == MembershipStatus::Member; }
};

/// Membership in the localization K[S']_(m_S') of the derived semigroup
/// algebra at its monomial maximal ideal, which is the sigma-image of the
/// reciprocal complement of K[S].
///
/// A reduced p/q lies there iff q(0) != 0 and some h with h(0) = 1 makes the
/// supports of p*h and q*h avoid the gaps of S'. Coefficients of a product
/// at degree j only involve h_k for k <= j, so h can be truncated at the
/// Frobenius number of S' and the search is a finite linear system.
class SemigroupMembership {
 public:
  explicit SemigroupMembership(NumericalSemigroup s);

  const NumericalSemigroup& semigroup() const { return s_; }
  const NumericalSemigroup& derived() const { return derived_; }

  /// Requires rank 1 (std::invalid_argument otherwise).
  MembershipVerdict decide(const RationalFunction& r) const;
  bool verify(const RationalFunction& r, const LaurentPolynomial& h) const;
  bool contains_monomial(std::int64_t g) const;
  /// Membership of r in the reciprocal complement R(K[S]) itself: tests sigma(r).
  MembershipVerdict decide_reciprocal(const RationalFunction& r) const;

 private:
  NumericalSemigroup s_;
  NumericalSemigroup derived_;
};

MembershipVerdict decide_membership(const RationalFunction& r, const NumericalSemigroup& s);
bool verify_certificate(const RationalFunction& r, const NumericalSemigroup& s, const LaurentPolynomial& h);
bool monomial_membership(std::int64_t g, const NumericalSemigroup& s);
MembershipVerdict in_reciprocal_complement(const RationalFunction& r, const NumericalSemigroup& s);

}  // namespace recip
