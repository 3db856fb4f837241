#include "recip/parse.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <vector>

namespace recip {

ParseError::ParseError(std::size_t position, std::string expected)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " +
                         expected),
      position_(position),
      expected_(std::move(expected)) {}

VariableScheme::VariableScheme(std::size_t rank, std::string tuple_symbol)
    : rank_(rank), tuple_symbol_(std::move(tuple_symbol)) {
  if (rank == 0) throw std::invalid_argument("variable scheme rank must be positive");
}

VariableScheme VariableScheme::univariate() {
  VariableScheme v(1);
  v.bind("X", 0).bind("x", 0).bind("y", 0);
  return v;
}

VariableScheme VariableScheme::indexed(std::size_t rank) {
  VariableScheme v(rank);
  for (std::size_t i = 0; i < rank; ++i) v.bind("X" + std::to_string(i + 1), i);
  if (rank == 1) v.bind("X", 0);
  return v;
}

VariableScheme VariableScheme::y_then_x_block(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Y/X scheme needs n >= 2");
  VariableScheme v(n);
  v.bind("Y", 0);
  if (n == 2) {
    v.bind("X", 1);
  } else {
    for (std::size_t i = 1; i < n; ++i) v.bind("X" + std::to_string(i + 1), i);
  }
  return v;
}

VariableScheme& VariableScheme::bind(std::string name, std::size_t coord) {
  if (coord >= rank_) throw std::out_of_range("variable coordinate out of range");
  names_[std::move(name)] = coord;
  return *this;
}

std::optional<std::size_t> VariableScheme::lookup(std::string_view name) const {
  auto it = names_.find(name);
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

namespace {

constexpr std::int64_t kMaxPower = 100000;

class Parser {
 public:
  Parser(std::string_view text, const VariableScheme& vars) : vars_(vars) {
    // Map the UTF-8 minus sign to '-' while keeping byte positions.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text.substr(i, 3) == "\xE2\x88\x92") {
        chars_.push_back({'-', i});
        i += 2;
      } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back({text[i], i});
      }
    }
    end_position_ = text.size();
  }

  RationalFunction parse() {
    RationalFunction r = expr();
    if (!at_end()) fail("end of input or operator");
    return r;
  }

 private:
  struct Char {
    char c;
    std::size_t pos;
  };

  bool at_end() const { return i_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[i_].c; }
  std::size_t position() const { return at_end() ? end_position_ : chars_[i_].pos; }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(position(), expected); }

  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  bool starts_primary() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '(';
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (peek() == '/') {
        const std::size_t at = position();
        ++i_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError(at, "nonzero divisor");
        acc = acc / d;
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  std::int64_t integer_literal() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = peek() - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail("smaller integer");
      v = v * 10 + digit;
      ++i_;
    }
    return v;
  }

  std::int64_t signed_integer() {
    bool negative = false;
    while (peek() == '-' || peek() == '+') {
      if (peek() == '-') negative = !negative;
      ++i_;
    }
    const std::int64_t v = integer_literal();
    return negative ? -v : v;
  }

  // After '^': an integer, or a parenthesized list of integers.
  std::vector<std::int64_t> exponent_list() {
    std::vector<std::int64_t> values;
    if (accept('(')) {
      values.push_back(signed_integer());
      while (accept(',')) values.push_back(signed_integer());
      expect(')');
    } else {
      values.push_back(signed_integer());
    }
    return values;
  }

  static RationalFunction int_power(const RationalFunction& base, std::int64_t k, std::size_t at) {
    if (k > kMaxPower || k < -kMaxPower) throw ParseError(at, "exponent of smaller magnitude");
    if (k < 0 && base.is_zero()) throw ParseError(at, "nonzero base for a negative power");
    RationalFunction b = k < 0 ? base.inverse() : base;
    const auto n = static_cast<unsigned>(k < 0 ? -k : k);
    return RationalFunction(b.num().pow(n), b.den().pow(n));
  }

  RationalFunction power() {
    if (std::isalpha(static_cast<unsigned char>(peek()))) return symbol_power();
    RationalFunction base = primary();
    if (accept('^')) {
      const std::size_t at = position();
      const auto values = exponent_list();
      if (values.size() != 1) throw ParseError(at, "single integer exponent");
      return int_power(base, values.front(), at);
    }
    return base;
  }

  RationalFunction symbol_power() {
    const std::size_t at = position();
    std::string name;
    name.push_back(peek());
    ++i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      name.push_back(peek());
      ++i_;
    }
    const std::size_t rank = vars_.rank();
    const auto coord = vars_.lookup(name);
    const bool is_tuple_symbol = name == vars_.tuple_symbol();
    if (!coord && !is_tuple_symbol) throw ParseError(at, "known variable name");

    if (!accept('^')) {
      if (!coord) fail("'^(' exponent vector after " + name);
      return RationalFunction(LaurentPolynomial::monomial(Exponent::unit(rank, *coord)));
    }
    const std::size_t exp_at = position();
    const auto values = exponent_list();
    if (values.size() == 1 && coord) {
      const auto unit = RationalFunction(LaurentPolynomial::monomial(Exponent::unit(rank, *coord)));
      return int_power(unit, values.front(), exp_at);
    }
    if (!is_tuple_symbol) throw ParseError(exp_at, "single integer exponent");
    if (values.size() != rank) {
      throw ParseError(exp_at, "exponent vector with " + std::to_string(rank) + " coordinates");
    }
    for (auto v : values) {
      if (v > kMaxPower || v < -kMaxPower) throw ParseError(exp_at, "exponent of smaller magnitude");
    }
    return RationalFunction(LaurentPolynomial::monomial(Exponent(values)));
  }

  RationalFunction primary() {
    if (accept('(')) {
      RationalFunction r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits.push_back(peek());
        ++i_;
      }
      return RationalFunction::constant(vars_.rank(), Rational(Integer(digits)));
    }
    fail("number, variable or '('");
  }

  const VariableScheme& vars_;
  std::vector<Char> chars_;
  std::size_t i_ = 0;
  std::size_t end_position_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const VariableScheme& vars) {
  Parser p(text, vars);
  return p.parse();
}

LaurentPolynomial parse_polynomial(std::string_view text, const VariableScheme& vars) {
  RationalFunction r = parse_rational_function(text, vars);
  if (!r.is_laurent()) throw ParseError(text.size(), "polynomial (denominator must be a monomial)");
  return r.as_laurent();
}

}  // namespace recip
