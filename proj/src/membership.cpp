#include "recip/membership.hpp"

#include <cassert>
#include <stdexcept>

#include "recip/linear_system.hpp"
#include "recip/sigma.hpp"

namespace recip {

std::string_view to_string(MembershipStatus s) {
  return s == MembershipStatus::Member ? "Member" : "NotMember";
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::PoleAtOrigin:
      return "PoleAtOrigin";
    case Obstruction::LinearSystemInfeasible:
      return "LinearSystemInfeasible";
  }
  return "?";
}

MembershipVerdict MembershipVerdict::member(LaurentPolynomial h) {
  return {MembershipStatus::Member, std::move(h), std::nullopt};
}

MembershipVerdict MembershipVerdict::not_member(Obstruction o) {
  return {MembershipStatus::NotMember, std::nullopt, o};
}

SemigroupMembership::SemigroupMembership(NumericalSemigroup s)
    : s_(std::move(s)), derived_(derive_sprime(s_)) {}

namespace {

void require_rank1(const RationalFunction& r) {
  if (r.rank() != 1) throw std::invalid_argument("membership decision needs a univariate rational function");
}

Rational coeff_at(const LaurentPolynomial& p, std::int64_t degree) {
  return p.coefficient(Exponent{degree});
}

}  // namespace

MembershipVerdict SemigroupMembership::decide(const RationalFunction& r) const {
  require_rank1(r);
  // r is stored reduced with polynomial num and den.
  const Rational q0 = r.den().constant_term();
  if (is_zero(q0)) return MembershipVerdict::not_member(Obstruction::PoleAtOrigin);
  const LaurentPolynomial p = r.num() * Rational(1 / q0);
  const LaurentPolynomial q = r.den() * Rational(1 / q0);

  const std::int64_t frob = derived_.frobenius();
  LaurentPolynomial h = LaurentPolynomial::constant(1, 1);
  if (frob >= 1) {
    LinearSystem system;
    system.unknowns = static_cast<std::size_t>(frob);
    for (const LaurentPolynomial* f : {&p, &q}) {
      for (std::int64_t gap : derived_.gaps()) {
        // coefficient of f*h at `gap`: f_gap + sum_{k=1..gap} f_{gap-k} h_k
        std::vector<Rational> row(system.unknowns);
        for (std::int64_t k = 1; k <= gap; ++k) row[static_cast<std::size_t>(k - 1)] = coeff_at(*f, gap - k);
        system.add_equation(std::move(row), -coeff_at(*f, gap));
      }
    }
    const auto solution = solve(system);
    if (!solution) return MembershipVerdict::not_member(Obstruction::LinearSystemInfeasible);
    std::vector<Rational> dense{Rational(1)};
    dense.insert(dense.end(), solution->begin(), solution->end());
    h = LaurentPolynomial::from_dense(dense);
  }
  assert(verify(r, h));
  return MembershipVerdict::member(std::move(h));
}

bool SemigroupMembership::verify(const RationalFunction& r, const LaurentPolynomial& h) const {
  require_rank1(r);
  if (h.rank() != 1 || !h.is_polynomial() || is_zero(h.constant_term())) return false;
  const LaurentPolynomial ph = r.num() * h;
  const LaurentPolynomial qh = r.den() * h;
  for (const LaurentPolynomial* f : {&ph, &qh}) {
    for (const auto& [e, c] : f->terms()) {
      if (!derived_.contains(e[0])) return false;
    }
  }
  return !is_zero(qh.constant_term());
}

bool SemigroupMembership::contains_monomial(std::int64_t g) const {
  if (g < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
  return derived_.contains(g);
}

MembershipVerdict SemigroupMembership::decide_reciprocal(const RationalFunction& r) const {
  require_rank1(r);
  return decide(sigma_map(r));
}

MembershipVerdict decide_membership(const RationalFunction& r, const NumericalSemigroup& s) {
  return SemigroupMembership(s).decide(r);
}

bool verify_certificate(const RationalFunction& r, const NumericalSemigroup& s, const LaurentPolynomial& h) {
  return SemigroupMembership(s).verify(r, h);
}

bool monomial_membership(std::int64_t g, const NumericalSemigroup& s) {
  return SemigroupMembership(s).contains_monomial(g);
}

MembershipVerdict in_reciprocal_complement(const RationalFunction& r, const NumericalSemigroup& s) {
  return SemigroupMembership(s).decide_reciprocal(r);
}

}  // namespace recip
