#pragma once

#include <optional>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

/// Conjunction of linear constraints over Q, decided exactly by
/// Fourier-Motzkin elimination. Meant for small systems: the number of
/// derived constraints can grow quickly with the number of variables.
class FourierMotzkin {
 public:
  explicit FourierMotzkin(std::size_t variables) : n_(variables) {}

  std::size_t variables() const { return n_; }

  /// coeffs . x <= bound
  void add_le(std::vector<Rational> coeffs, Rational bound);
  /// coeffs . x >= bound
  void add_ge(std::vector<Rational> coeffs, Rational bound);
  /// coeffs . x == bound
  void add_eq(std::vector<Rational> coeffs, Rational bound);

  /// A feasible point, preferring 0 and then integers inside each variable's
  /// bounds during back-substitution; nullopt when infeasible.
  std::optional<std::vector<Rational>> solve() const;

 private:
  struct Row {
    std::vector<Rational> a;
    Rational b;
  };
  std::size_t n_;
  std::vector<Row> rows_;
};

}  // namespace recip
