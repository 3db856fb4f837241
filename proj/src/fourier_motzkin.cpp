#include "recip/fourier_motzkin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace recip {

namespace {

struct Constraint {
  std::vector<Rational> a;
  Rational b;
};

struct ConstraintLess {
  bool operator()(const Constraint& x, const Constraint& y) const {
    if (x.a != y.a) return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
    return x.b < y.b;
  }
};

using RowSet = std::set<Constraint, ConstraintLess>;

// Scales so the first nonzero coefficient has magnitude 1, which lets the
// set drop duplicates. Rows without variables are kept only if violated.
void insert_normalized(RowSet& rows, Constraint r) {
  auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rational& c) { return !is_zero(c); });
  if (it == r.a.end()) {
    if (sgn(r.b) < 0) rows.insert(std::move(r));
    return;
  }
  const Rational scale = 1 / abs(*it);
  for (auto& c : r.a) c *= scale;
  r.b *= scale;
  rows.insert(std::move(r));
}

RowSet eliminate(const RowSet& rows, std::size_t k) {
  RowSet out;
  std::vector<const Constraint*> upper, lower;
  for (const Constraint& r : rows) {
    const int s = sgn(r.a[k]);
    if (s > 0) {
      upper.push_back(&r);
    } else if (s < 0) {
      lower.push_back(&r);
    } else {
      out.insert(r);
    }
  }
  for (const Constraint* u : upper) {
    for (const Constraint* l : lower) {
      const Rational cu = -l->a[k];
      const Rational cl = u->a[k];
      Constraint r{std::vector<Rational>(u->a.size()), cu * u->b + cl * l->b};
      for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = cu * u->a[j] + cl * l->a[j];
      r.a[k] = 0;
      insert_normalized(out, std::move(r));
    }
  }
  return out;
}

Rational ceil_of(const Rational& q) {
  Integer z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(z);
}

Rational floor_of(const Rational& q) {
  Integer z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(z);
}

}  // namespace

void FourierMotzkin::add_le(std::vector<Rational> coeffs, Rational bound) {
  if (coeffs.size() != n_) throw std::invalid_argument("constraint width mismatch");
  rows_.push_back({std::move(coeffs), std::move(bound)});
}

void FourierMotzkin::add_ge(std::vector<Rational> coeffs, Rational bound) {
  for (auto& c : coeffs) c = -c;
  add_le(std::move(coeffs), -bound);
}

void FourierMotzkin::add_eq(std::vector<Rational> coeffs, Rational bound) {
  add_le(coeffs, bound);
  add_ge(std::move(coeffs), std::move(bound));
}

std::optional<std::vector<Rational>> FourierMotzkin::solve() const {
  // stages[k] only involves variables 0..k.
  std::vector<RowSet> stages(n_ + 1);
  RowSet current;
  for (const auto& r : rows_) insert_normalized(current, {r.a, r.b});
  for (std::size_t k = n_; k-- > 0;) {
    stages[k] = current;
    current = eliminate(current, k);
  }
  for (const Constraint& r : current) {
    if (sgn(r.b) < 0) return std::nullopt;
  }

  std::vector<Rational> x(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    std::optional<Rational> lo, hi;
    for (const Constraint& r : stages[k]) {
      const int s = sgn(r.a[k]);
      if (s == 0) continue;
      Rational rest = r.b;
      for (std::size_t j = 0; j < k; ++j) rest -= r.a[j] * x[j];
      const Rational v = rest / r.a[k];
      if (s > 0) {
        if (!hi || v < *hi) hi = v;
      } else {
        if (!lo || v > *lo) lo = v;
      }
    }
    const bool zero_fits = (!lo || sgn(*lo) <= 0) && (!hi || sgn(*hi) >= 0);
    if (zero_fits) {
      x[k] = 0;
    } else if (lo) {
      const Rational c = ceil_of(*lo);
      x[k] = (!hi || c <= *hi) ? c : *lo;
    } else {
      x[k] = floor_of(*hi);
    }
  }
  return x;
}

}  // namespace recip
