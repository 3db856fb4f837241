#pragma once

#include "recip/laurent.hpp"
#include "recip/rational_function.hpp"

namespace recip {

/// The field automorphism X^g -> X^{-g}, fixing coefficients. Involutive.
LaurentPolynomial sigma_map(const LaurentPolynomial& p);
RationalFunction sigma_map(const RationalFunction& r);

/// sigma(1/f) written as X^s / sum_i u_i X^{s - s_i} with s the lex-largest
/// exponent of f. Requires f nonzero with lex-nonnegative exponents.
RationalFunction sigma_of_reciprocal(const LaurentPolynomial& f);

/// (phi + u)(phi^2 + u^2)...(phi^{2^{e-1}} + u^{2^{e-1}}). Requires u != 0, e >= 1.
LaurentPolynomial geometric_product(const LaurentPolynomial& phi, const Rational& u, unsigned e);

/// sum_{j=0}^{2^e - 1} phi^j u^{2^e - 1 - j}; equals geometric_product.
LaurentPolynomial geometric_sum(const LaurentPolynomial& phi, const Rational& u, unsigned e);

}  // namespace recip
