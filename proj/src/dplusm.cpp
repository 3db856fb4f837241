#include "recip/dplusm.hpp"

#include <stdexcept>

namespace recip {

namespace {

enum class Side { Infinity, Zero };

// Extreme Y-degree and the coefficient of that Y-power (a Laurent
// polynomial in the X block, returned with its Y coordinate zeroed).
std::pair<std::int64_t, LaurentPolynomial> y_extreme(const LaurentPolynomial& p, Side side) {
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first || (side == Side::Infinity ? e[0] > best : e[0] < best)) best = e[0];
    first = false;
  }
  LaurentPolynomial coeff =
      p.filter([&](const Exponent& e) { return e[0] == best; }).shifted(Exponent(p.rank()).with(0, -best));
  return {best, coeff};
}

KPlusMVerdict decide(const RationalFunction& r, std::size_t n, Side side) {
  if (r.rank() != n) throw std::invalid_argument("expression rank does not match n");
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (r.is_zero()) {
    return {MembershipStatus::Member, Rational(0), RationalFunction::constant(n, 0)};
  }
  const auto [dn, ln] = y_extreme(r.num(), side);
  const auto [dd, ld] = y_extreme(r.den(), side);
  // Pole at the chosen point: the numerator dominates there.
  const bool pole = side == Side::Infinity ? dn > dd : dn < dd;
  if (pole) return {MembershipStatus::NotMember, std::nullopt, std::nullopt};
  Rational value = 0;
  if (dn == dd) {
    value = ln.leading_coefficient() / ld.leading_coefficient();
    if (!(ln == ld * value)) return {MembershipStatus::NotMember, std::nullopt, std::nullopt};
  }
  RationalFunction rest = r - RationalFunction::constant(n, value);
  return {MembershipStatus::Member, value, std::move(rest)};
}

}  // namespace

KPlusMVerdict kplusm_membership(const RationalFunction& r, std::size_t n, std::size_t m) {
  if (m != 1) {
    throw std::domain_error("membership for m != 1 is undecidable in this artifact");
  }
  return decide(r, n, Side::Infinity);
}

KPlusMVerdict kplusm_membership_twisted(const RationalFunction& r, std::size_t n) {
  return decide(r, n, Side::Zero);
}

std::int64_t t_order(const RationalFunction& r) {
  if (r.is_zero()) throw std::domain_error("order of zero");
  return y_extreme(r.den(), Side::Infinity).first - y_extreme(r.num(), Side::Infinity).first;
}

bool check_dplusm_decomposition(std::span<const ReciprocalSum> samples, std::size_t n) {
  for (const auto& sample : samples) {
    if (sample.rank() != n) throw std::invalid_argument("sample rank does not match n");
    for (const auto& d : sample.denominators()) {
      for (const auto& [e, c] : d.terms()) {
        if (!e.is_zero() && e[0] < 1) {
          throw std::invalid_argument("denominator term " + e.to_string() + " is outside the algebra");
        }
      }
    }
  }
  for (const auto& sample : samples) {
    if (!kplusm_membership(normalize_reciprocal_sum(sample), n).is_member()) return false;
  }
  return true;
}

}  // namespace recip
