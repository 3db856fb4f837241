#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "recip/dimension.hpp"
#include "recip/dplusm.hpp"
#include "recip/egyptian.hpp"
#include "recip/membership.hpp"
#include "recip/parse.hpp"
#include "recip/reciprocal_sum.hpp"
#include "recip/semigroup.hpp"
#include "recip/valuation.hpp"
#include "recip/witness_search.hpp"

namespace recip::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for malformed user input (exit 3).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

Json exponent_json(const Exponent& e) { return Json(e.coords()); }

Exponent exponent_from_json(const Json& j) {
  try {
    return Exponent(j.get<std::vector<std::int64_t>>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("exponent vector expected: ") + e.what());
  }
}

// Everything a subcommand may read from the command line.
struct Config {
  std::string format = "json";
  std::string gens;
  std::string file;
  std::string expr;
  std::string denominators;
  std::string a, b;
  std::string monoid_json;
  std::string rational;
  std::string coeffs = "1,-1,2,-2,1/2,-1/2";
  std::size_t rank = 1;
  std::size_t n = 2;
  std::size_t m = 1;
  std::size_t times = 1;
  std::size_t orthant = 0;
  std::size_t full_cone = 0;
  std::size_t max_terms = 3;
  std::int64_t max_degree = 12;
  std::uint64_t seed = 1;
  std::size_t budget = 5000;
  std::size_t trials = 2000;
};

NumericalSemigroup semigroup_from(const Config& c) {
  std::vector<std::int64_t> gens;
  if (!c.file.empty()) {
    const Json j = read_json_file(c.file);
    if (!j.contains("generators")) throw InputError(c.file + ": missing \"generators\"");
    try {
      gens = j.at("generators").get<std::vector<std::int64_t>>();
    } catch (const Json::exception& e) {
      throw InputError(c.file + ": " + e.what());
    }
  } else if (!c.gens.empty()) {
    gens = parse_int_list(c.gens);
  } else {
    throw std::invalid_argument("either --gens or --file is required");
  }
  return NumericalSemigroup::create(gens);
}

Json semigroup_json(const NumericalSemigroup& s) {
  Json j;
  j["generators"] = s.generators();
  j["gaps"] = s.gaps();
  j["frobenius"] = s.frobenius();
  j["conductor"] = s.conductor();
  return j;
}

Json verdict_json(const MembershipVerdict& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  if (v.certificate) j["certificate"] = to_string(*v.certificate);
  if (v.obstruction) j["obstruction"] = std::string(to_string(*v.obstruction));
  return j;
}

LexMonoid monoid_from_json(const Json& j) {
  try {
    const auto rank = j.at("rank").get<std::size_t>();
    std::vector<Exponent> gens;
    if (j.contains("generators")) {
      for (const auto& g : j.at("generators")) gens.push_back(exponent_from_json(g));
    }
    std::vector<MonoidFamily> families;
    if (j.contains("families")) {
      for (const auto& f : j.at("families")) {
        MonoidFamily fam{exponent_from_json(f.at("base")), {}};
        if (f.contains("free")) {
          for (auto c : f.at("free").get<std::vector<std::size_t>>()) {
            if (c == 0) throw std::invalid_argument("free coordinates are 1-based");
            fam.free_coords.push_back(c - 1);
          }
        }
        families.push_back(std::move(fam));
      }
    }
    return LexMonoid(rank, std::move(gens), std::move(families));
  } catch (const Json::exception& e) {
    throw InputError(std::string("monoid JSON: ") + e.what());
  }
}

Json monoid_json(const LexMonoid& m) {
  Json j;
  j["rank"] = m.rank();
  Json gens = Json::array();
  for (const auto& g : m.generators()) gens.push_back(exponent_json(g));
  j["generators"] = gens;
  Json fams = Json::array();
  for (const auto& f : m.families()) {
    Json free = Json::array();
    for (auto c : f.free_coords) free.push_back(c + 1);
    fams.push_back(Json{{"base", exponent_json(f.base)}, {"free", free}});
  }
  j["families"] = fams;
  return j;
}

Json report_json(const LexMonoid& monoid, const DimensionReport& r) {
  Json j;
  j["rank"] = r.rank;
  j["si"] = r.si_nonempty;
  j["t"] = r.empty_strata;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  j["exactSource"] = r.exact_source ? Json(std::string(to_string(*r.exact_source))) : Json(nullptr);
  Json witnesses = Json::array();
  for (std::size_t i = 1; i <= monoid.rank(); ++i) {
    const auto w = stratum_witness(monoid, i);
    witnesses.push_back(w ? exponent_json(w->element) : Json(nullptr));
  }
  j["witnesses"] = witnesses;
  return j;
}

RationalFunction parse_expr(const std::string& text, const VariableScheme& vars) {
  if (text.empty()) throw std::invalid_argument("--expr is required");
  return parse_rational_function(text, vars);
}

void emit(const Json& j, const Config& c, std::ostream& out) {
  if (c.format == "plain") {
    for (const auto& [key, value] : j.items()) {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return;
  }
  out << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reciprocal complements of semigroup algebras: exact membership, valuations, "
               "dimension reports and Egyptian fractions.",
               "recip"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--format", c.format, "Output mode")->check(CLI::IsMember({"json", "plain"}));

  std::map<CLI::App*, std::function<Json()>> handlers;
  auto add_semigroup_input = [&](CLI::App* sub) {
    sub->add_option("--gens", c.gens, "Comma-separated generators, e.g. 4,7,9");
    sub->add_option("--file", c.file, "JSON file {\"generators\":[...]}");
  };

  auto* semigroup = app.add_subcommand("semigroup", "Semigroup invariants and the derived semigroup S'");
  add_semigroup_input(semigroup);
  handlers[semigroup] = [&] {
    const auto s = semigroup_from(c);
    Json j = semigroup_json(s);
    j["multiplicity"] = s.multiplicity();
    j["sprime_generators"] = derive_sprime(s).generators();
    j["stable"] = sprime_stability_check(s);
    return j;
  };

  auto* sprime = app.add_subcommand("sprime", "Minimal generators of the derived semigroup S'");
  add_semigroup_input(sprime);
  sprime->add_option("--times", c.times, "Apply the derivation this many times")->check(CLI::Range(1, 64));
  handlers[sprime] = [&] {
    auto s = semigroup_from(c);
    for (std::size_t i = 0; i < c.times; ++i) s = derive_sprime(s);
    return Json{{"sprime_generators", s.generators()}};
  };

  auto* member = app.add_subcommand("member", "Decide membership in K[S']_(m_S')");
  add_semigroup_input(member);
  member->add_option("--expr", c.expr, "Rational function in X")->required();
  handlers[member] = [&] {
    const auto s = semigroup_from(c);
    return verdict_json(decide_membership(parse_expr(c.expr, VariableScheme::univariate()), s));
  };

  auto* recip_member = app.add_subcommand("recip-member", "Decide membership in the reciprocal complement R(K[S])");
  add_semigroup_input(recip_member);
  recip_member->add_option("--expr", c.expr, "Rational function in X");
  recip_member->add_option("--denominators", c.denominators, "Semicolon-separated d_i of a sum 1/d_1 + ... + 1/d_n");
  handlers[recip_member] = [&] {
    const auto s = semigroup_from(c);
    const auto vars = VariableScheme::univariate();
    RationalFunction r = RationalFunction::constant(1, 0);
    if (!c.denominators.empty()) {
      std::vector<LaurentPolynomial> dens;
      std::stringstream ss(c.denominators);
      std::string item;
      while (std::getline(ss, item, ';')) dens.push_back(parse_polynomial(item, vars));
      r = normalize_reciprocal_sum(ReciprocalSum(std::move(dens)));
    } else {
      r = parse_expr(c.expr, vars);
    }
    return verdict_json(in_reciprocal_complement(r, s));
  };

  auto* valuation = app.add_subcommand("valuation", "Lex valuation of a rational function in X1..XN");
  valuation->add_option("--rank", c.rank, "Rank N")->check(CLI::Range(1, 64));
  valuation->add_option("--expr", c.expr, "Rational function in X1..XN or X^(a,b,...)")->required();
  handlers[valuation] = [&] {
    const auto r = parse_expr(c.expr, VariableScheme::indexed(c.rank));
    const auto v = lex_valuation(r);
    Json j;
    j["valuation"] = v.is_infinite() ? Json("infinity") : exponent_json(v.value());
    j["in_valuation_ring"] = in_valuation_ring(r);
    return j;
  };

  auto* divide = app.add_subcommand("divide", "Euclidean division in Q[y]");
  divide->add_option("--a", c.a, "Dividend")->required();
  divide->add_option("--b", c.b, "Divisor")->required();
  handlers[divide] = [&] {
    const auto vars = VariableScheme::univariate();
    const auto d = euclid_divide(parse_polynomial(c.a, vars), parse_polynomial(c.b, vars));
    return Json{{"q", to_string(d.quotient, "y")}, {"r", to_string(d.remainder, "y")}};
  };

  auto* dimension = app.add_subcommand("dimension", "Krull-dimension report for a lex-ordered monoid");
  dimension->add_option("--file", c.file, "Monoid JSON file");
  dimension->add_option("--json", c.monoid_json, "Inline monoid JSON");
  dimension->add_option("--gens", c.gens, "Numerical semigroup generators");
  dimension->add_option("--orthant", c.orthant, "N^N with unit generators");
  dimension->add_option("--full-cone", c.full_cone, "All lex-nonnegative vectors of Z^N");
  handlers[dimension] = [&] {
    std::optional<LexMonoid> monoid;
    if (!c.file.empty()) {
      monoid = monoid_from_json(read_json_file(c.file));
    } else if (!c.monoid_json.empty()) {
      Json j;
      try {
        j = Json::parse(c.monoid_json);
      } catch (const Json::parse_error& e) {
        throw InputError(e.what());
      }
      monoid = monoid_from_json(j);
    } else if (!c.gens.empty()) {
      monoid = LexMonoid::from_numerical(NumericalSemigroup::create(parse_int_list(c.gens)));
    } else if (c.orthant > 0) {
      monoid = LexMonoid::orthant(c.orthant);
    } else if (c.full_cone > 0) {
      monoid = LexMonoid::full_cone(c.full_cone);
    } else {
      throw std::invalid_argument("one of --file, --json, --gens, --orthant, --full-cone is required");
    }
    Json j = report_json(*monoid, dimension_report(*monoid));
    j["noetherian"] = reciprocal_noetherian(*monoid);
    return j;
  };

  auto* thm56 = app.add_subcommand("thm56", "Monoid generated by Y_j X_i^k and its dimension report");
  thm56->add_option("--n", c.n, "Total number of variables")->required();
  thm56->add_option("--m", c.m, "Number of Y variables")->required();
  handlers[thm56] = [&] {
    const auto monoid = build_kplusm_monoid(c.n, c.m);
    return Json{{"monoid", monoid_json(monoid)},
                {"dimD", monoid.rank()},
                {"report", report_json(monoid, dimension_report(monoid))}};
  };

  auto* kplusm = app.add_subcommand("kplusm", "Membership in K + M for the Y X^k algebra (m = 1)");
  kplusm->add_option("--n", c.n, "Total number of variables (Y plus the X block)")->required();
  kplusm->add_option("--m", c.m, "Number of Y variables; only 1 is decidable");
  kplusm->add_option("--expr", c.expr, "Rational function in Y and X (n = 2) or X2..Xn")->required();
  handlers[kplusm] = [&] {
    if (c.m != 1) throw std::invalid_argument("membership for m != 1 is undecidable in this artifact");
    const auto vars = VariableScheme::y_then_x_block(c.n);
    const auto v = kplusm_membership(parse_expr(c.expr, vars), c.n, c.m);
    Json j;
    j["status"] = std::string(to_string(v.status));
    j["constant"] = v.constant_part ? Json(to_string(*v.constant_part)) : Json(nullptr);
    j["maximal"] = v.maximal_part ? Json(to_string(*v.maximal_part)) : Json(nullptr);
    return j;
  };

  auto* egyptian = app.add_subcommand("egyptian", "Greedy Egyptian fraction of a rational in (0,1]");
  egyptian->add_option("rational", c.rational, "p/q")->required();
  handlers[egyptian] = [&] {
    Rational r;
    try {
      r = parse_rational(c.rational);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    Json dens = Json::array();
    for (const auto& d : greedy_egyptian(r).denominators) dens.push_back(integer_json(d));
    return Json{{"denominators", dens}};
  };

  auto* oracle = app.add_subcommand("oracle", "Seeded search for a reciprocal-sum witness");
  add_semigroup_input(oracle);
  oracle->add_option("--expr", c.expr, "Target rational function in X")->required();
  oracle->add_option("--max-terms", c.max_terms, "Maximum number of reciprocals")->check(CLI::Range(1, 8));
  oracle->add_option("--max-degree", c.max_degree, "Maximum denominator degree")->check(CLI::Range(0, 64));
  oracle->add_option("--coeffs", c.coeffs, "Comma-separated coefficient pool");
  oracle->add_option("--seed", c.seed, "Random seed (default 1)");
  oracle->add_option("--budget", c.budget, "Exhaustive-phase prefix budget");
  oracle->add_option("--trials", c.trials, "Random-phase trials");
  handlers[oracle] = [&] {
    const auto s = semigroup_from(c);
    WitnessSearchBounds bounds;
    bounds.max_terms = c.max_terms;
    bounds.max_degree = c.max_degree;
    bounds.seed = c.seed;
    bounds.exhaustive_budget = c.budget;
    bounds.random_trials = c.trials;
    bounds.coeff_pool.clear();
    std::stringstream ss(c.coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        bounds.coeff_pool.push_back(parse_rational(item));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    const auto w = brute_force_witness(parse_expr(c.expr, VariableScheme::univariate()), s, bounds);
    Json j;
    j["seed"] = c.seed;
    j["status"] = w ? "found" : "none-within-bounds";
    if (w) {
      Json dens = Json::array();
      for (const auto& d : w->denominators()) dens.push_back(to_string(d));
      j["witness"] = dens;
    } else {
      j["witness"] = nullptr;
    }
    return j;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  for (auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    try {
      emit(handler(), c, out);
      return kOk;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kParse;
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return kParse;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  err << app.help();
  return kUsage;
}

}  // namespace recip::cli
