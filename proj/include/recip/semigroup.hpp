#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace recip {

/// A cofinite submonoid of N, stored by its minimal generators and its
/// membership table below the conductor.
class NumericalSemigroup {
 public:
  /// Throws std::invalid_argument for an empty list, a nonpositive
  /// generator or generators with gcd != 1.
  static NumericalSemigroup create(std::span<const std::int64_t> generators);
  static NumericalSemigroup create(std::initializer_list<std::int64_t> generators) {
    return create(std::span<const std::int64_t>(generators.begin(), generators.size()));
  }

  /// Minimal generating set, ascending.
  const std::vector<std::int64_t>& generators() const { return generators_; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  /// Largest gap; -1 for N itself.
  std::int64_t frobenius() const { return conductor_ - 1; }
  std::int64_t conductor() const { return conductor_; }
  /// Smallest nonzero element.
  std::int64_t multiplicity() const { return generators_.front(); }

  bool contains(std::int64_t x) const;
  /// Members in [0, bound], ascending.
  std::vector<std::int64_t> elements_up_to(std::int64_t bound) const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> gaps_;
  std::vector<bool> below_conductor_;
  std::int64_t conductor_ = 0;
};

/// The semigroup S' generated by every value n*s - (s_1 + ... + s_{n-1})
/// with s, s_i in S and 0 < s_i < s. Contains S and has the same
/// multiplicity.
NumericalSemigroup derive_sprime(const NumericalSemigroup& s);

/// True iff every integer from the second-smallest minimal generator on is a
/// member (always true for N). When true, derive_sprime(s) == s.
bool sprime_stability_check(const NumericalSemigroup& s);

}  // namespace recip
