#pragma once

#include <optional>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

/// Dense system A x = b over Q.
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<std::vector<Rational>> rows;  // each of length `unknowns`
  std::vector<Rational> rhs;

  void add_equation(std::vector<Rational> row, Rational value);
};

/// Exact Gauss-Jordan elimination. Returns a solution with every free
/// unknown set to zero, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const LinearSystem& system);

}  // namespace recip
