#include "recip/dimension.hpp"

#include <algorithm>
#include <stdexcept>

#include "recip/fourier_motzkin.hpp"

namespace recip {

LexMonoid::LexMonoid(std::size_t rank, std::vector<Exponent> generators, std::vector<MonoidFamily> families)
    : rank_(rank), generators_(std::move(generators)), families_(std::move(families)) {
  if (rank_ == 0) throw std::invalid_argument("monoid rank must be positive");
  for (const auto& g : generators_) {
    if (g.rank() != rank_) throw std::invalid_argument("generator rank mismatch");
    if (!g.lex_positive()) throw std::invalid_argument("generator " + g.to_string() + " is not lex-positive");
  }
  for (auto& f : families_) {
    if (f.base.rank() != rank_) throw std::invalid_argument("family base rank mismatch");
    if (!f.base.lex_positive()) {
      throw std::invalid_argument("family base " + f.base.to_string() + " is not lex-positive");
    }
    std::sort(f.free_coords.begin(), f.free_coords.end());
    f.free_coords.erase(std::unique(f.free_coords.begin(), f.free_coords.end()), f.free_coords.end());
    for (auto c : f.free_coords) {
      if (c >= rank_) throw std::invalid_argument("free coordinate out of range");
      if (c <= f.base.leading_index()) {
        throw std::invalid_argument("free coordinate must follow the leading coordinate of the base");
      }
    }
  }
}

LexMonoid LexMonoid::from_numerical(const NumericalSemigroup& s) {
  std::vector<Exponent> gens;
  for (auto g : s.generators()) gens.push_back(Exponent{g});
  return LexMonoid(1, std::move(gens));
}

LexMonoid LexMonoid::orthant(std::size_t rank) {
  std::vector<Exponent> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(Exponent::unit(rank, i));
  return LexMonoid(rank, std::move(gens));
}

LexMonoid LexMonoid::full_cone(std::size_t rank) {
  std::vector<MonoidFamily> families;
  for (std::size_t i = 0; i < rank; ++i) {
    MonoidFamily f{Exponent::unit(rank, i), {}};
    for (std::size_t c = i + 1; c < rank; ++c) f.free_coords.push_back(c);
    families.push_back(std::move(f));
  }
  return LexMonoid(rank, {}, std::move(families));
}

LexMonoid LexMonoid::with_generator(Exponent g) const {
  auto gens = generators_;
  gens.push_back(std::move(g));
  return LexMonoid(rank_, std::move(gens), families_);
}

namespace {

struct VariableLayout {
  std::size_t generators = 0;
  std::vector<std::size_t> used;          // family indices
  std::vector<std::size_t> shift_offset;  // first shift variable of each used family
  std::size_t count = 0;
};

VariableLayout layout_for(const LexMonoid& m, unsigned long mask) {
  VariableLayout v;
  v.generators = m.generators().size();
  std::size_t next = v.generators;
  for (std::size_t f = 0; f < m.families().size(); ++f) {
    if (mask >> f & 1UL) v.used.push_back(f);
  }
  next += v.used.size();
  for (auto f : v.used) {
    v.shift_offset.push_back(next);
    next += m.families()[f].free_coords.size();
  }
  v.count = next;
  return v;
}

std::optional<StratumWitness> try_subset(const LexMonoid& m, std::size_t coord, unsigned long mask) {
  const VariableLayout v = layout_for(m, mask);
  FourierMotzkin fm(v.count);
  // Row `c` of the element: the c-th coordinate as a linear form.
  auto coordinate_form = [&](std::size_t c) {
    std::vector<Rational> row(v.count);
    for (std::size_t g = 0; g < v.generators; ++g) row[g] = Rational(m.generators()[g][c]);
    for (std::size_t u = 0; u < v.used.size(); ++u) {
      const MonoidFamily& fam = m.families()[v.used[u]];
      row[v.generators + u] = Rational(fam.base[c]);
      for (std::size_t s = 0; s < fam.free_coords.size(); ++s) {
        if (fam.free_coords[s] == c) row[v.shift_offset[u] + s] = 1;
      }
    }
    return row;
  };
  for (std::size_t c = 0; c < coord; ++c) fm.add_eq(coordinate_form(c), 0);
  fm.add_ge(coordinate_form(coord), 1);
  for (std::size_t g = 0; g < v.generators; ++g) {
    std::vector<Rational> row(v.count);
    row[g] = 1;
    fm.add_ge(std::move(row), 0);
  }
  for (std::size_t u = 0; u < v.used.size(); ++u) {
    std::vector<Rational> row(v.count);
    row[v.generators + u] = 1;
    fm.add_ge(std::move(row), 1);
  }
  const auto solution = fm.solve();
  if (!solution) return std::nullopt;

  // Constraints are homogeneous apart from lower bounds of 1, so scaling by
  // the common denominator keeps the point feasible and makes it integral.
  const Integer scale = common_denominator(*solution);
  std::vector<Integer> ints;
  for (const auto& q : *solution) ints.push_back(Integer(q * scale));

  StratumWitness w{Exponent(m.rank()), {}, std::vector<Integer>(m.families().size(), 0),
                   std::vector<std::vector<Integer>>(m.families().size())};
  std::vector<Integer> element(m.rank(), 0);
  for (std::size_t g = 0; g < v.generators; ++g) {
    w.generator_multiplicities.push_back(ints[g]);
    for (std::size_t c = 0; c < m.rank(); ++c) element[c] += ints[g] * m.generators()[g][c];
  }
  for (std::size_t u = 0; u < v.used.size(); ++u) {
    const std::size_t f = v.used[u];
    const MonoidFamily& fam = m.families()[f];
    w.family_multiplicities[f] = ints[v.generators + u];
    for (std::size_t c = 0; c < m.rank(); ++c) element[c] += ints[v.generators + u] * fam.base[c];
    for (std::size_t s = 0; s < fam.free_coords.size(); ++s) {
      const Integer& shift = ints[v.shift_offset[u] + s];
      w.family_shifts[f].push_back(shift);
      element[fam.free_coords[s]] += shift;
    }
  }

  std::vector<std::int64_t> coords;
  for (const auto& z : element) {
    if (!z.fits_slong_p()) throw std::overflow_error("stratum witness coordinate too large");
    coords.push_back(z.get_si());
  }
  w.element = Exponent(std::move(coords));

  bool ok = w.element[coord] > 0;
  for (std::size_t c = 0; c < coord; ++c) ok = ok && w.element[c] == 0;
  for (const auto& k : w.generator_multiplicities) ok = ok && k >= 0;
  for (auto f : v.used) ok = ok && w.family_multiplicities[f] >= 1;
  if (!ok) throw std::logic_error("stratum witness failed its re-check");
  return w;
}

// Rank over Q of the given integer vectors.
std::size_t lattice_rank(std::vector<std::vector<Rational>> rows, std::size_t width) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][col])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][col])) continue;
      const Rational f = rows[i][col] / rows[r][col];
      for (std::size_t k = col; k < width; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::optional<StratumWitness> stratum_witness(const LexMonoid& m, std::size_t i) {
  if (i < 1 || i > m.rank()) throw std::out_of_range("stratum index out of range");
  const std::size_t families = m.families().size();
  if (families >= 20) throw std::invalid_argument("too many families for the subset case split");
  for (unsigned long mask = 0; mask < (1UL << families); ++mask) {
    if (auto w = try_subset(m, i - 1, mask)) return w;
  }
  return std::nullopt;
}

bool si_nonempty(const LexMonoid& m, std::size_t i) { return stratum_witness(m, i).has_value(); }

std::string_view to_string(ExactSource s) {
  switch (s) {
    case ExactSource::AllNonempty:
      return "AllNonempty";
    case ExactSource::KPlusMFamily:
      return "Thm56Family";
    case ExactSource::Rank1:
      return "Rank1";
  }
  return "?";
}

LexMonoid build_kplusm_monoid(std::size_t n, std::size_t m) {
  if (!(n > m && m >= 1)) throw std::invalid_argument("need n > m >= 1");
  std::vector<MonoidFamily> families;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = m; i < n; ++i) families.push_back({Exponent::unit(n, j), {i}});
  }
  return LexMonoid(n, {}, std::move(families));
}

std::optional<std::size_t> match_kplusm_monoid(const LexMonoid& monoid) {
  if (!monoid.generators().empty()) return std::nullopt;
  auto key = [](const MonoidFamily& f) { return std::make_pair(f.base, f.free_coords); };
  std::vector<std::pair<Exponent, std::vector<std::size_t>>> have;
  for (const auto& f : monoid.families()) have.push_back(key(f));
  std::sort(have.begin(), have.end());
  have.erase(std::unique(have.begin(), have.end()), have.end());
  const std::size_t n = monoid.rank();
  for (std::size_t m = 1; m < n; ++m) {
    if (have.size() != m * (n - m)) continue;
    std::vector<std::pair<Exponent, std::vector<std::size_t>>> want;
    const LexMonoid reference = build_kplusm_monoid(n, m);
    for (const auto& f : reference.families()) want.push_back(key(f));
    std::sort(want.begin(), want.end());
    if (want == have) return m;
  }
  return std::nullopt;
}

DimensionReport dimension_report(const LexMonoid& m) {
  DimensionReport r;
  r.rank = m.rank();
  for (std::size_t i = 1; i <= m.rank(); ++i) {
    const bool nonempty = si_nonempty(m, i);
    r.si_nonempty.push_back(nonempty);
    if (!nonempty) ++r.empty_strata;
  }
  r.lower = r.rank - r.empty_strata;
  r.upper = r.rank;
  if (r.rank == 1 && r.si_nonempty[0]) {
    r.exact = 1;
    r.exact_source = ExactSource::Rank1;
  } else if (r.empty_strata == 0) {
    r.exact = r.rank;
    r.exact_source = ExactSource::AllNonempty;
  } else if (auto k = match_kplusm_monoid(m)) {
    r.exact = *k;
    r.exact_source = ExactSource::KPlusMFamily;
  }
  return r;
}

bool reciprocal_noetherian(const LexMonoid& m) {
  std::vector<std::vector<Rational>> rows;
  auto as_row = [](const Exponent& e) {
    std::vector<Rational> row;
    for (auto c : e.coords()) row.emplace_back(c);
    return row;
  };
  for (const auto& g : m.generators()) rows.push_back(as_row(g));
  for (const auto& f : m.families()) {
    if (!f.free_coords.empty()) return false;
    rows.push_back(as_row(f.base));
  }
  return lattice_rank(std::move(rows), m.rank()) <= 1;
}

}  // namespace recip
