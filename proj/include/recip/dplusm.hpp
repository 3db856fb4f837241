#pragma once

#include <optional>
#include <span>

#include "recip/membership.hpp"
#include "recip/rational_function.hpp"
#include "recip/reciprocal_sum.hpp"

namespace recip {

/// Verdict for membership in K + M, where M is the maximal ideal of the DVR
/// K(X-block)[T]_(T) with T = 1/Y.
struct KPlusMVerdict {
  MembershipStatus status;
  std::optional<Rational> constant_part;
  std::optional<RationalFunction> maximal_part;

  bool is_member() const { return status == MembershipStatus::Member; }
};

/// Decides r in K + Y^{-1} K(X-block)[Y^{-1}]_(Y^{-1}), the reciprocal
/// complement of the algebra generated by Y X_i^k (k in Z). Coordinate 0 of
/// r is Y and coordinates 1..n-1 are the X block.
///
/// Writing r = p/q in T = 1/Y over K(X-block): r has a pole at T = 0 iff
/// deg_Y p > deg_Y q; otherwise r(T=0) is 0 (deg_Y p < deg_Y q) or the ratio
/// of the leading Y-coefficients, and r is a member iff that value is in Q.
/// Both tests are invariant under cancelling common factors, so no
/// multivariate gcd is needed.
///
/// Only m = 1 is decidable here; any other m throws std::domain_error.
KPlusMVerdict kplusm_membership(const RationalFunction& r, std::size_t n, std::size_t m = 1);

/// The same test after sigma, i.e. membership in K + Y K(X-block)[Y]_(Y):
/// evaluates at Y = 0 instead of T = 0.
KPlusMVerdict kplusm_membership_twisted(const RationalFunction& r, std::size_t n);

/// Valuation of r at T = 1/Y (deg_Y q - deg_Y p); requires r != 0.
std::int64_t t_order(const RationalFunction& r);

/// Normalizes each sample and checks that it lies in K + M. Denominators
/// must be built from constants and monomials Y^j X^k with j >= 1; anything
/// else throws std::invalid_argument.
bool check_dplusm_decomposition(std::span<const ReciprocalSum> samples, std::size_t n);

}  // namespace recip
