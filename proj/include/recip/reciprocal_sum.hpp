#pragma once

#include <vector>

#include "recip/laurent.hpp"
#include "recip/rational_function.hpp"

namespace recip {

/// Formal sum 1/d_1 + ... + 1/d_n of reciprocals of nonzero polynomials.
class ReciprocalSum {
 public:
  /// Throws std::invalid_argument on an empty list, a zero denominator or
  /// mixed ranks.
  explicit ReciprocalSum(std::vector<LaurentPolynomial> denominators);

  const std::vector<LaurentPolynomial>& denominators() const { return denominators_; }
  std::size_t rank() const { return denominators_.front().rank(); }

 private:
  std::vector<LaurentPolynomial> denominators_;
};

/// Exact value of the sum. Independent of the order of the denominators.
RationalFunction normalize_reciprocal_sum(const ReciprocalSum& s);

}  // namespace recip
