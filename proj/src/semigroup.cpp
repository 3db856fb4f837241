#include "recip/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace recip {

NumericalSemigroup NumericalSemigroup::create(std::span<const std::int64_t> generators) {
  if (generators.empty()) throw std::invalid_argument("numerical semigroup needs generators");
  std::vector<std::int64_t> gens(generators.begin(), generators.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() <= 0) throw std::invalid_argument("generators must be positive");
  std::int64_t g = 0;
  for (auto x : gens) g = std::gcd(g, x);
  if (g != 1) throw std::invalid_argument("generators must have gcd 1");

  // Grow the representability table until `multiplicity` consecutive members
  // appear; from there on everything is a member.
  const std::int64_t m = gens.front();
  std::vector<bool> member{true};
  std::int64_t run = 1;
  std::int64_t last_gap = -1;
  while (run < m) {
    const auto x = static_cast<std::int64_t>(member.size());
    bool in = false;
    for (auto a : gens) {
      if (a > x) break;
      if (member[static_cast<std::size_t>(x - a)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    if (in) {
      ++run;
    } else {
      run = 0;
      last_gap = x;
    }
  }

  NumericalSemigroup s;
  s.conductor_ = last_gap + 1;
  member.resize(static_cast<std::size_t>(s.conductor_));
  s.below_conductor_ = member;
  for (std::int64_t x = 1; x < s.conductor_; ++x) {
    if (!member[static_cast<std::size_t>(x)]) s.gaps_.push_back(x);
  }
  // Every minimal generator is at most conductor + multiplicity.
  for (std::int64_t x = 1; x <= s.conductor_ + m; ++x) {
    if (!s.contains(x)) continue;
    bool decomposable = false;
    for (std::int64_t y = m; y <= x - m; ++y) {
      if (s.contains(y) && s.contains(x - y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.generators_.push_back(x);
  }
  return s;
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return below_conductor_[static_cast<std::size_t>(x)];
}

std::vector<std::int64_t> NumericalSemigroup::elements_up_to(std::int64_t bound) const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x <= bound; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

NumericalSemigroup derive_sprime(const NumericalSemigroup& s) {
  // S_n(s) = s + (sum of n-1 differences s - s_i), each difference >= 1.
  // Only values below the conductor can add generators, so for each s we run
  // an unbounded subset-sum over the differences up to conductor - s - 1.
  const std::int64_t c = s.conductor();
  std::vector<std::int64_t> gens = s.generators();
  for (std::int64_t top = 1; top < c; ++top) {
    if (!s.contains(top)) continue;
    std::vector<std::int64_t> diffs;
    for (std::int64_t lower = 1; lower < top; ++lower) {
      if (s.contains(lower)) diffs.push_back(top - lower);
    }
    const std::int64_t limit = c - top - 1;
    if (limit < 0) continue;
    std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
    reach[0] = true;
    for (std::int64_t v = 1; v <= limit; ++v) {
      for (auto d : diffs) {
        if (d <= v && reach[static_cast<std::size_t>(v - d)]) {
          reach[static_cast<std::size_t>(v)] = true;
          break;
        }
      }
    }
    for (std::int64_t v = 0; v <= limit; ++v) {
      if (reach[static_cast<std::size_t>(v)] && !s.contains(top + v)) gens.push_back(top + v);
    }
  }
  return NumericalSemigroup::create(gens);
}

bool sprime_stability_check(const NumericalSemigroup& s) {
  const auto& g = s.generators();
  if (g.size() < 2) return true;
  return s.conductor() <= g[1];
}

}  // namespace recip
