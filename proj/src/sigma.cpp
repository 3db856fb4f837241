#include "recip/sigma.hpp"

#include <cassert>
#include <stdexcept>

namespace recip {

LaurentPolynomial sigma_map(const LaurentPolynomial& p) {
  return p.map_exponents([](const Exponent& e) { return -e; });
}

RationalFunction sigma_map(const RationalFunction& r) {
  return RationalFunction(sigma_map(r.num()), sigma_map(r.den()));
}

RationalFunction sigma_of_reciprocal(const LaurentPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("reciprocal of zero");
  for (const auto& [e, c] : f.terms()) {
    if (!e.lex_nonnegative()) throw std::invalid_argument("exponent below zero in lex order");
  }
  const Exponent& top = f.lex_max();
  LaurentPolynomial den = f.map_exponents([&](const Exponent& e) { return top - e; });
  return RationalFunction(LaurentPolynomial::monomial(top), std::move(den));
}

namespace {

void check_geometric_args(const Rational& u, unsigned e) {
  if (is_zero(u)) throw std::invalid_argument("geometric product needs a nonzero unit");
  if (e == 0) throw std::invalid_argument("geometric product needs e >= 1");
  if (e >= 31) throw std::invalid_argument("geometric product exponent too large");
}

}  // namespace

LaurentPolynomial geometric_product(const LaurentPolynomial& phi, const Rational& u, unsigned e) {
  check_geometric_args(u, e);
  const std::size_t rank = phi.rank();
  LaurentPolynomial product = LaurentPolynomial::constant(rank, 1);
  LaurentPolynomial phi_power = phi;
  Rational u_power = u;
  for (unsigned k = 0; k < e; ++k) {
    product = product * (phi_power + LaurentPolynomial::constant(rank, u_power));
    if (k + 1 < e) {
      phi_power = phi_power * phi_power;
      u_power *= u_power;
    }
  }
  assert(product == geometric_sum(phi, u, e));
  return product;
}

LaurentPolynomial geometric_sum(const LaurentPolynomial& phi, const Rational& u, unsigned e) {
  check_geometric_args(u, e);
  const unsigned long terms = 1UL << e;
  LaurentPolynomial sum(phi.rank());
  LaurentPolynomial phi_power = LaurentPolynomial::constant(phi.rank(), 1);
  for (unsigned long j = 0; j < terms; ++j) {
    Rational coeff;
    mpq_class base(u);
    mpz_pow_ui(coeff.get_num_mpz_t(), base.get_num_mpz_t(), terms - 1 - j);
    mpz_pow_ui(coeff.get_den_mpz_t(), base.get_den_mpz_t(), terms - 1 - j);
    coeff.canonicalize();
    sum += phi_power * coeff;
    phi_power = phi_power * phi;
  }
  return sum;
}

}  // namespace recip
