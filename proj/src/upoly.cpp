#include "recip/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace recip {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && recip::is_zero(c_.back())) c_.pop_back();
}

UPoly UPoly::from_laurent(const LaurentPolynomial& p) {
  if (p.rank() != 1) throw std::invalid_argument("univariate polynomial expected");
  if (!p.is_polynomial()) throw std::invalid_argument("negative exponent in univariate polynomial");
  if (p.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(p.lex_max()[0]) + 1);
  for (const auto& [e, x] : p.terms()) c[static_cast<std::size_t>(e[0])] = x;
  return UPoly(std::move(c));
}

LaurentPolynomial UPoly::to_laurent() const { return LaurentPolynomial::from_dense(c_); }

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly r = *this;
  const Rational lc = leading();
  for (auto& x : r.c_) x /= lc;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational& lb = b.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational coef = rem[k + b.c_.size() - 1] / lb;
    quo[k] = coef;
    if (recip::is_zero(coef)) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= coef * b.c_[j];
  }
  rem.resize(b.c_.size() - 1);
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = UPoly::divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace recip
