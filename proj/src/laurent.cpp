#include "recip/laurent.hpp"

#include <stdexcept>

namespace recip {

namespace {

void require_same_rank(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("polynomial rank mismatch");
}

void require_nonzero(const LaurentPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("operation undefined on the zero polynomial");
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::size_t rank) : rank_(rank) {
  if (rank == 0) throw std::invalid_argument("polynomial rank must be positive");
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const Rational& c) {
  LaurentPolynomial p(rank);
  p.add_term(Exponent(rank), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const Rational& c) {
  LaurentPolynomial p(e.rank());
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_dense(const std::vector<Rational>& coeffs) {
  LaurentPolynomial p(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term(Exponent{static_cast<std::int64_t>(i)}, coeffs[i]);
  }
  return p;
}

void LaurentPolynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.rank() != rank_) throw std::invalid_argument("term rank mismatch");
  if (recip::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (recip::is_zero(it->second)) terms_.erase(it);
  }
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> LaurentPolynomial::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

const Exponent& LaurentPolynomial::lex_min() const {
  require_nonzero(*this);
  return terms_.begin()->first;
}

const Exponent& LaurentPolynomial::lex_max() const {
  require_nonzero(*this);
  return terms_.rbegin()->first;
}

const Rational& LaurentPolynomial::trailing_coefficient() const {
  require_nonzero(*this);
  return terms_.begin()->second;
}

const Rational& LaurentPolynomial::leading_coefficient() const {
  require_nonzero(*this);
  return terms_.rbegin()->second;
}

Exponent LaurentPolynomial::min_corner() const {
  require_nonzero(*this);
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) m = coordinate_min(m, e);
  return m;
}

bool LaurentPolynomial::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    for (auto x : e.coords()) {
      if (x < 0) return false;
    }
  }
  return true;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  require_same_rank(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  require_same_rank(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (recip::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  require_same_rank(a, b);
  LaurentPolynomial p(a.rank());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(rank_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponent& e) const {
  LaurentPolynomial p(rank_);
  for (const auto& [x, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), x + e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::map_exponents(
    const std::function<Exponent(const Exponent&)>& f) const {
  LaurentPolynomial p(rank_);
  for (const auto& [e, c] : terms_) p.add_term(f(e), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::filter(const std::function<bool(const Exponent&)>& keep) const {
  LaurentPolynomial p(rank_);
  for (const auto& [e, c] : terms_) {
    if (keep(e)) p.terms_.emplace_hint(p.terms_.end(), e, c);
  }
  return p;
}

std::string to_string(const LaurentPolynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    if (e.is_zero()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += var;
    if (p.rank() == 1) {
      if (e[0] != 1) out += "^" + std::to_string(e[0]);
    } else {
      out += "^" + e.to_string();
    }
  }
  return out;
}

}  // namespace recip
