#include "recip/linear_system.hpp"

#include <stdexcept>

namespace recip {

void LinearSystem::add_equation(std::vector<Rational> row, Rational value) {
  if (row.size() != unknowns) throw std::invalid_argument("equation width mismatch");
  rows.push_back(std::move(row));
  rhs.push_back(std::move(value));
}

std::optional<std::vector<Rational>> solve(const LinearSystem& system) {
  auto a = system.rows;
  auto b = system.rhs;
  const std::size_t n = system.unknowns;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && is_zero(a[p][col])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][col];
    for (std::size_t k = col; k < n; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || is_zero(a[i][col])) continue;
      const Rational f = a[i][col];
      for (std::size_t k = col; k < n; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i) {
    if (!is_zero(b[i])) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace recip
