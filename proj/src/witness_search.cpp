#include "recip/witness_search.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace recip {

namespace {

class Search {
 public:
  Search(const RationalFunction& target, const NumericalSemigroup& s, const WitnessSearchBounds& b)
      : target_(target), s_(s), b_(b), support_(s.elements_up_to(b.max_degree)) {
    if (target.rank() != 1) throw std::invalid_argument("witness search needs a univariate target");
    if (b.max_terms == 0 || b.max_degree < 0 || b.coeff_pool.empty()) {
      throw std::invalid_argument("witness search bounds must be positive");
    }
    for (const auto& c : b.coeff_pool) {
      if (is_zero(c)) throw std::invalid_argument("coefficient pool must not contain 0");
    }
    build_candidates();
  }

  std::optional<ReciprocalSum> run() {
    for (std::size_t k = 0; k + 1 <= b_.max_terms; ++k) {
      std::vector<std::size_t> prefix;
      if (auto w = exhaustive(k, 0, target_, prefix)) return w;
      if (budget_used_ >= b_.exhaustive_budget) break;
    }
    return random_phase();
  }

 private:
  bool admissible(const LaurentPolynomial& d) const {
    if (d.is_zero() || !d.is_polynomial()) return false;
    for (const auto& [e, c] : d.terms()) {
      if (e[0] > b_.max_degree || !s_.contains(e[0])) return false;
      if (std::find(b_.coeff_pool.begin(), b_.coeff_pool.end(), c) == b_.coeff_pool.end()) return false;
    }
    return true;
  }

  void build_candidates() {
    const auto& pool = b_.coeff_pool;
    for (auto e : support_) {
      for (const auto& c : pool) candidates_.push_back(LaurentPolynomial::monomial(Exponent{e}, c));
    }
    for (std::size_t i = 0; i < support_.size(); ++i) {
      for (std::size_t j = i + 1; j < support_.size(); ++j) {
        for (const auto& ci : pool) {
          for (const auto& cj : pool) {
            candidates_.push_back(LaurentPolynomial::monomial(Exponent{support_[i]}, ci) +
                                  LaurentPolynomial::monomial(Exponent{support_[j]}, cj));
          }
        }
      }
    }
  }

  // The last reciprocal is forced: 1/d = rest.
  std::optional<ReciprocalSum> complete(const RationalFunction& rest, std::vector<LaurentPolynomial> dens) {
    if (rest.is_zero()) {
      if (dens.empty()) return std::nullopt;
      return ReciprocalSum(std::move(dens));
    }
    if (!rest.num().is_monomial()) return std::nullopt;
    const LaurentPolynomial last = rest.inverse().as_laurent();
    if (!admissible(last)) return std::nullopt;
    dens.push_back(last);
    return ReciprocalSum(std::move(dens));
  }

  std::optional<ReciprocalSum> exhaustive(std::size_t remaining, std::size_t start, const RationalFunction& rest,
                                          std::vector<std::size_t>& prefix) {
    if (remaining == 0) {
      if (budget_used_ >= b_.exhaustive_budget) return std::nullopt;
      ++budget_used_;
      std::vector<LaurentPolynomial> dens;
      for (auto i : prefix) dens.push_back(candidates_[i]);
      return complete(rest, std::move(dens));
    }
    for (std::size_t i = start; i < candidates_.size(); ++i) {
      if (budget_used_ >= b_.exhaustive_budget) return std::nullopt;
      prefix.push_back(i);
      const RationalFunction next = rest - RationalFunction(LaurentPolynomial::constant(1, 1), candidates_[i]);
      auto w = exhaustive(remaining - 1, i, next, prefix);
      prefix.pop_back();
      if (w) return w;
    }
    return std::nullopt;
  }

  LaurentPolynomial random_candidate(std::mt19937_64& rng) const {
    LaurentPolynomial d(1);
    const std::size_t terms = 1 + rng() % 3;
    for (std::size_t t = 0; t < terms; ++t) {
      const auto e = support_[rng() % support_.size()];
      const auto& c = b_.coeff_pool[rng() % b_.coeff_pool.size()];
      d += LaurentPolynomial::monomial(Exponent{e}, c);
    }
    return d;
  }

  std::optional<ReciprocalSum> random_phase() {
    if (b_.max_terms < 2) return std::nullopt;
    std::mt19937_64 rng(b_.seed);
    for (std::size_t trial = 0; trial < b_.random_trials; ++trial) {
      const std::size_t k = 1 + rng() % (b_.max_terms - 1);
      std::vector<LaurentPolynomial> dens;
      RationalFunction rest = target_;
      for (std::size_t i = 0; i < k; ++i) {
        LaurentPolynomial d = random_candidate(rng);
        if (!admissible(d)) break;
        rest = rest - RationalFunction(LaurentPolynomial::constant(1, 1), d);
        dens.push_back(std::move(d));
      }
      if (dens.size() != k) continue;
      if (auto w = complete(rest, std::move(dens))) return w;
    }
    return std::nullopt;
  }

  const RationalFunction& target_;
  const NumericalSemigroup& s_;
  const WitnessSearchBounds& b_;
  std::vector<std::int64_t> support_;
  std::vector<LaurentPolynomial> candidates_;
  std::size_t budget_used_ = 0;
};

}  // namespace

std::optional<ReciprocalSum> brute_force_witness(const RationalFunction& r, const NumericalSemigroup& s,
                                                 const WitnessSearchBounds& bounds) {
  return Search(r, s, bounds).run();
}

}  // namespace recip
