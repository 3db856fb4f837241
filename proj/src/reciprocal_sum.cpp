#include "recip/reciprocal_sum.hpp"

#include <stdexcept>

namespace recip {

ReciprocalSum::ReciprocalSum(std::vector<LaurentPolynomial> denominators)
    : denominators_(std::move(denominators)) {
  if (denominators_.empty()) throw std::invalid_argument("empty reciprocal sum");
  for (const auto& d : denominators_) {
    if (d.is_zero()) throw std::invalid_argument("zero denominator in reciprocal sum");
    if (d.rank() != denominators_.front().rank()) {
      throw std::invalid_argument("reciprocal sum mixes ranks");
    }
  }
}

RationalFunction normalize_reciprocal_sum(const ReciprocalSum& s) {
  RationalFunction total = RationalFunction::constant(s.rank(), 0);
  for (const auto& d : s.denominators()) {
    total = total + RationalFunction(LaurentPolynomial::constant(d.rank(), 1), d);
  }
  return total;
}

}  // namespace recip
