#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace recip {

/// A point of Z^N. Ordering is lexicographic: the first differing
/// coordinate decides.
class Exponent {
 public:
  explicit Exponent(std::size_t rank) : coords_(rank, 0) {}
  Exponent(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit Exponent(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  static Exponent unit(std::size_t rank, std::size_t index);

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  Exponent with(std::size_t i, std::int64_t value) const;

  bool is_zero() const;
  /// Strictly positive in lex order: the leading nonzero coordinate is > 0.
  bool lex_positive() const;
  bool lex_nonnegative() const { return is_zero() || lex_positive(); }
  /// Index of the first nonzero coordinate, rank() when zero.
  std::size_t leading_index() const;

  Exponent operator-() const;
  Exponent& operator+=(const Exponent& o);
  Exponent& operator-=(const Exponent& o);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  friend Exponent operator*(std::int64_t k, const Exponent& e);

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    return a.coords_ <=> b.coords_;
  }

  /// "(1,-2)" style rendering.
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

/// Coordinatewise minimum.
Exponent coordinate_min(const Exponent& a, const Exponent& b);

}  // namespace recip
