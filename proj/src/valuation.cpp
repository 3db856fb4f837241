#include "recip/valuation.hpp"

#include <stdexcept>
#include <vector>

namespace recip {

const Exponent& ValuationValue::value() const {
  if (!value_) throw std::domain_error("valuation is infinite");
  return *value_;
}

ValuationValue operator+(const ValuationValue& a, const ValuationValue& b) {
  if (a.is_infinite() || b.is_infinite()) return ValuationValue::infinity();
  return ValuationValue(*a.value_ + *b.value_);
}

std::strong_ordering operator<=>(const ValuationValue& a, const ValuationValue& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return *a.value_ <=> *b.value_;
}

std::string ValuationValue::to_string() const {
  return value_ ? value_->to_string() : "infinity";
}

ValuationValue lex_valuation(const RationalFunction& r) {
  if (r.is_zero()) return ValuationValue::infinity();
  return ValuationValue(r.num().lex_min() - r.den().lex_min());
}

bool in_valuation_ring(const RationalFunction& r) {
  const ValuationValue v = lex_valuation(r);
  return v.is_infinite() || v.value().lex_nonnegative();
}

namespace {

void require_univariate_polynomial(const LaurentPolynomial& a) {
  if (a.rank() != 1 || !a.is_polynomial()) {
    throw std::invalid_argument("Euclidean division works in the univariate polynomial ring");
  }
}

// c[i] = coefficient of y^{deg - i}, i = 0..count-1 (the expansion of
// a / (y^deg) in powers of 1/y, truncated).
std::vector<Rational> expansion_at_infinity(const LaurentPolynomial& a, std::int64_t count) {
  const std::int64_t deg = a.lex_max()[0];
  std::vector<Rational> c(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) c[static_cast<std::size_t>(i)] = a.coefficient(Exponent{deg - i});
  return c;
}

}  // namespace

std::int64_t euclid_f(const LaurentPolynomial& a) {
  require_univariate_polynomial(a);
  if (a.is_zero()) throw std::domain_error("Euclidean function undefined at zero");
  return a.lex_max()[0];
}

EuclideanDivision euclid_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_univariate_polynomial(a);
  require_univariate_polynomial(b);
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const LaurentPolynomial zero(1);
  if (a.is_zero()) return {zero, zero};

  const std::int64_t e1 = euclid_f(a);
  const std::int64_t e2 = euclid_f(b);
  if (e1 < e2) return {zero, a};
  if (e2 == 0) {
    // b is a unit and divides a.
    return {a * Rational(1 / b.leading_coefficient()), zero};
  }

  // a = y^e1 (u1 + sum_i a_i / y^i + ...), b = y^e2 (u2 + sum_i b_i / y^i + ...)
  // q = y^e (u + sum_{i=1..e} c_i / y^i) with u = u1/u2 and
  // c_i = (a_i - u b_i - sum_{j+k=i, j,k>=1} b_j c_k) / u2.
  const std::int64_t e = e1 - e2;
  const auto ac = expansion_at_infinity(a, e + 1);
  const auto bc = expansion_at_infinity(b, e + 1);
  const Rational& u1 = ac[0];
  const Rational& u2 = bc[0];
  const Rational u = u1 / u2;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[0] = u;
  for (std::int64_t i = 1; i <= e; ++i) {
    Rational acc = ac[static_cast<std::size_t>(i)] - u * bc[static_cast<std::size_t>(i)];
    for (std::int64_t j = 1; j < i; ++j) {
      acc -= bc[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
    }
    c[static_cast<std::size_t>(i)] = acc / u2;
  }
  LaurentPolynomial q(1);
  for (std::int64_t i = 0; i <= e; ++i) q += LaurentPolynomial::monomial(Exponent{e - i}, c[static_cast<std::size_t>(i)]);
  LaurentPolynomial r = a - b * q;
  return {std::move(q), std::move(r)};
}

}  // namespace recip
