#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "recip/laurent.hpp"
#include "recip/rational_function.hpp"

namespace recip {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected);
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

/// Names the coordinates an expression may refer to. The tuple symbol
/// (default "X") accepts a full exponent vector, "X^(1,-2)"; named variables
/// map to unit exponents.
class VariableScheme {
 public:
  explicit VariableScheme(std::size_t rank, std::string tuple_symbol = "X");

  /// Rank 1 with X, x and y all naming the single coordinate.
  static VariableScheme univariate();
  /// Rank N with X1..XN plus the X^(..) tuple form.
  static VariableScheme indexed(std::size_t rank);
  /// Rank n, coordinate 0 is Y and the rest are the X block: "X" when n = 2,
  /// otherwise X2..Xn.
  static VariableScheme y_then_x_block(std::size_t n);

  VariableScheme& bind(std::string name, std::size_t coord);

  std::size_t rank() const { return rank_; }
  const std::string& tuple_symbol() const { return tuple_symbol_; }
  std::optional<std::size_t> lookup(std::string_view name) const;

 private:
  std::size_t rank_;
  std::string tuple_symbol_;
  std::map<std::string, std::size_t, std::less<>> names_;
};

/// Parses +, -, *, /, ^ (integer powers), parentheses, juxtaposition as
/// product, rational literals and monomials. Whitespace is ignored and the
/// Unicode minus sign is accepted for '-'.
RationalFunction parse_rational_function(std::string_view text, const VariableScheme& vars);

/// As parse_rational_function, then requires a Laurent polynomial value.
LaurentPolynomial parse_polynomial(std::string_view text, const VariableScheme& vars);

}  // namespace recip
