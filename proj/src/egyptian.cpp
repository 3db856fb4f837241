#include "recip/egyptian.hpp"

#include <stdexcept>

namespace recip {

EgyptianRepresentation greedy_egyptian(const Rational& r) {
  if (sgn(r) <= 0 || r > 1) throw std::invalid_argument("greedy expansion needs 0 < r <= 1");
  EgyptianRepresentation out;
  Rational rest = r;
  while (sgn(rest) > 0) {
    out.remainder_numerators.push_back(rest.get_num());
    Integer d;
    mpz_cdiv_q(d.get_mpz_t(), rest.get_den_mpz_t(), rest.get_num_mpz_t());
    out.denominators.push_back(d);
    rest -= Rational(Integer(1), d);
  }
  return out;
}

bool is_egyptian_element(const LaurentPolynomial& f) {
  for (const auto& [e, c] : f.terms()) {
    if (!e.lex_nonnegative()) throw std::invalid_argument("element is outside the semigroup algebra");
  }
  return !f.is_zero() && f.is_constant();
}

std::vector<Rational> algebraic_reciprocal(const std::vector<Rational>& minpoly) {
  if (minpoly.size() < 2) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  if (is_zero(minpoly.front())) throw std::invalid_argument("constant coefficient is zero: x would be 0");
  if (is_zero(minpoly.back())) throw std::invalid_argument("leading coefficient is zero");
  std::vector<Rational> b;
  for (std::size_t i = 1; i < minpoly.size(); ++i) b.push_back(-minpoly[i] / minpoly.front());
  return b;
}

}  // namespace recip
