#include "recip/exponent.hpp"

#include <algorithm>
#include <stdexcept>

namespace recip {

namespace {

void require_same_rank(const Exponent& a, const Exponent& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("exponent rank mismatch");
}

}  // namespace

Exponent Exponent::unit(std::size_t rank, std::size_t index) {
  if (index >= rank) throw std::out_of_range("unit exponent index out of range");
  Exponent e(rank);
  e.coords_[index] = 1;
  return e;
}

Exponent Exponent::with(std::size_t i, std::int64_t value) const {
  Exponent e = *this;
  e.coords_.at(i) = value;
  return e;
}

bool Exponent::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

std::size_t Exponent::leading_index() const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return i;
  }
  return coords_.size();
}

bool Exponent::lex_positive() const {
  const std::size_t i = leading_index();
  return i < coords_.size() && coords_[i] > 0;
}

Exponent Exponent::operator-() const {
  Exponent e = *this;
  for (auto& c : e.coords_) c = -c;
  return e;
}

Exponent& Exponent::operator+=(const Exponent& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Exponent operator*(std::int64_t k, const Exponent& e) {
  Exponent r = e;
  for (auto& c : r.coords_) c *= k;
  return r;
}

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

Exponent coordinate_min(const Exponent& a, const Exponent& b) {
  require_same_rank(a, b);
  std::vector<std::int64_t> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(a[i], b[i]);
  return Exponent(std::move(c));
}

}  // namespace recip
