#include "recip/rational_function.hpp"

#include <stdexcept>

#include "recip/upoly.hpp"

namespace recip {

RationalFunction::RationalFunction(LaurentPolynomial num)
    : num_(std::move(num)), den_(LaurentPolynomial::constant(num_.rank(), 1)) {
  normalize();
}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.rank() != den_.rank()) throw std::invalid_argument("rational function rank mismatch");
  normalize();
}

RationalFunction RationalFunction::constant(std::size_t rank, const Rational& c) {
  return RationalFunction(LaurentPolynomial::constant(rank, c));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  const std::size_t rank = num_.rank();
  if (num_.is_zero()) {
    den_ = LaurentPolynomial::constant(rank, 1);
    return;
  }
  const Exponent corner = -coordinate_min(num_.min_corner(), den_.min_corner());
  if (!corner.is_zero()) {
    num_ = num_.shifted(corner);
    den_ = den_.shifted(corner);
  }
  if (rank == 1) {
    UPoly n = UPoly::from_laurent(num_);
    UPoly d = UPoly::from_laurent(den_);
    const UPoly g = gcd(n, d);
    if (g.degree() > 0) {
      n = UPoly::divmod(n, g).first;
      d = UPoly::divmod(d, g).first;
    }
    const Rational lc = d.leading();
    num_ = n.to_laurent() * Rational(1 / lc);
    den_ = d.to_laurent() * Rational(1 / lc);
    return;
  }
  const Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ *= Rational(1 / lc);
    den_ *= Rational(1 / lc);
  }
  if (num_.size() == den_.size()) {
    const Rational ratio = num_.leading_coefficient();
    if (num_ == den_ * ratio) {
      num_ = LaurentPolynomial::constant(rank, ratio);
      den_ = LaurentPolynomial::constant(rank, 1);
    }
  }
}

LaurentPolynomial RationalFunction::as_laurent() const {
  if (!is_laurent()) throw std::domain_error("rational function is not a Laurent polynomial");
  const auto& [e, c] = *den_.terms().begin();
  return num_.shifted(-e) * Rational(1 / c);
}

bool RationalFunction::is_constant(Rational* value) const {
  if (!num_.is_constant() || !den_.is_constant()) return false;
  if (value) *value = num_.constant_term() / den_.constant_term();
  return true;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(Normalized{}, -num_, den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.rank() != b.rank()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string to_string(const RationalFunction& r, std::string_view var) {
  if (r.den().is_constant() && r.den().constant_term() == 1) return to_string(r.num(), var);
  return "(" + to_string(r.num(), var) + ")/(" + to_string(r.den(), var) + ")";
}

}  // namespace recip
