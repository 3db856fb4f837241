#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace recip::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, GoldenOutputs) {
  EXPECT_EQ(call({"sprime", "--gens", "4,7,9"}).out, "{\"sprime_generators\":[4,7,9,10]}\n");
  EXPECT_EQ(call({"egyptian", "1/2"}).out, "{\"denominators\":[2]}\n");
  EXPECT_EQ(call({"egyptian", "4/5"}).out, "{\"denominators\":[2,4,20]}\n");
  EXPECT_EQ(call({"member", "--gens", "4,7,9", "--expr", "X^5"}).out,
            "{\"status\":\"NotMember\",\"obstruction\":\"LinearSystemInfeasible\"}\n");
  EXPECT_EQ(call({"member", "--gens", "4,7,9", "--expr", "1/X"}).out,
            "{\"status\":\"NotMember\",\"obstruction\":\"PoleAtOrigin\"}\n");
  EXPECT_EQ(call({"member", "--gens", "2,3", "--expr", "1 + 2*X^3"}).out,
            "{\"status\":\"Member\",\"certificate\":\"1\"}\n");
}

TEST(Cli, Semigroup) {
  const auto j = json_of(call({"semigroup", "--gens", "4,7,9"}));
  EXPECT_EQ(j["gaps"], nlohmann::json({1, 2, 3, 5, 6, 10}));
  EXPECT_EQ(j["frobenius"], 10);
  EXPECT_EQ(j["conductor"], 11);
  EXPECT_EQ(j["sprime_generators"], nlohmann::json({4, 7, 9, 10}));
  EXPECT_EQ(j["stable"], false);
  const auto n = json_of(call({"semigroup", "--gens", "1"}));
  EXPECT_EQ(n["frobenius"], -1);
  EXPECT_EQ(n["conductor"], 0);
}

TEST(Cli, FileInput) {
  const std::string path = testing::TempDir() + "recip_cli_semigroup.json";
  std::ofstream(path) << R"({"generators":[4,7,9]})";
  EXPECT_EQ(call({"sprime", "--file", path}).out, "{\"sprime_generators\":[4,7,9,10]}\n");
  const std::string monoid = testing::TempDir() + "recip_cli_monoid.json";
  std::ofstream(monoid) << R"({"rank":2,"generators":[],"families":[{"base":[1,0],"free":[2]}]})";
  const auto j = json_of(call({"dimension", "--file", monoid}));
  EXPECT_EQ(j["si"], nlohmann::json({true, false}));
  EXPECT_EQ(j["exact"], 1);
  EXPECT_EQ(j["exactSource"], "Thm56Family");
  std::remove(path.c_str());
  std::remove(monoid.c_str());
}

TEST(Cli, Dimension) {
  auto j = json_of(call({"dimension", "--json", R"({"rank":2,"generators":[[1,0],[0,1]]})"}));
  EXPECT_EQ(j["exact"], 2);
  EXPECT_EQ(j["exactSource"], "AllNonempty");
  EXPECT_EQ(j["t"], 0);
  j = json_of(call({"thm56", "--n", "4", "--m", "2"}));
  EXPECT_EQ(j["report"]["t"], 2);
  EXPECT_EQ(j["report"]["exact"], 2);
  EXPECT_EQ(j["dimD"], 4);
  j = json_of(call({"dimension", "--json", R"({"rank":2,"generators":[[1,0]],"families":[{"base":[2,0],"free":[2]}]})"}));
  EXPECT_TRUE(j["exact"].is_null());
  EXPECT_EQ(j["lower"], 1);
  EXPECT_EQ(j["upper"], 2);
}

TEST(Cli, ValuationAndDivision) {
  auto j = json_of(call({"valuation", "--rank", "2", "--expr", "(X^(1,0) + X^(1,2))/X^(0,1)"}));
  EXPECT_EQ(j["valuation"], nlohmann::json({1, -1}));
  EXPECT_EQ(j["in_valuation_ring"], true);
  j = json_of(call({"valuation", "--rank", "2", "--expr", "0"}));
  EXPECT_EQ(j["valuation"], "infinity");
  j = json_of(call({"divide", "--a", "y^2+1", "--b", "y"}));
  EXPECT_EQ(j["q"], "y");
  EXPECT_EQ(j["r"], "1");
}

TEST(Cli, KPlusM) {
  auto j = json_of(call({"kplusm", "--n", "2", "--expr", "5 + (X/(X^2+1))*Y^-1"}));
  EXPECT_EQ(j["status"], "Member");
  EXPECT_EQ(j["constant"], "5");
  j = json_of(call({"kplusm", "--n", "2", "--expr", "X"}));
  EXPECT_EQ(j["status"], "NotMember");
  const auto r = call({"kplusm", "--n", "3", "--m", "2", "--expr", "Y"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("undecidable"), std::string::npos);
}

TEST(Cli, ReciprocalMembershipAndOracle) {
  auto j = json_of(call({"recip-member", "--gens", "4,7,9", "--denominators", "X^4 - 1; X^7"}));
  EXPECT_EQ(j["status"], "Member");
  j = json_of(call({"recip-member", "--gens", "1", "--expr", "X"}));
  EXPECT_EQ(j["obstruction"], "PoleAtOrigin");
  const auto o = call({"oracle", "--gens", "4,7,9", "--expr", "1/X^4 + 1/X^7"});
  j = json_of(o);
  EXPECT_EQ(o.out.rfind("{\"seed\":1,", 0), 0U);
  EXPECT_EQ(j["status"], "found");
  EXPECT_EQ(j["witness"], nlohmann::json({"X^4", "X^7"}));
  j = json_of(call({"oracle", "--gens", "4,7,9", "--expr", "1/X^5", "--budget", "200", "--trials", "50"}));
  EXPECT_EQ(j["status"], "none-within-bounds");
}

TEST(Cli, PlainFormat) {
  const auto r = call({"--format", "plain", "sprime", "--gens", "4,7,9"});
  EXPECT_EQ(r.out, "sprime_generators: [4,7,9,10]\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(call({"sprime"}).code, kUsage);
  EXPECT_EQ(call({"sprime", "--gens", "4,6"}).code, kUsage);
  EXPECT_EQ(call({"sprime", "--gens", "4,x"}).code, kParse);
  EXPECT_EQ(call({"egyptian", "3/2"}).code, kUsage);
  EXPECT_EQ(call({"egyptian", "a/b"}).code, kParse);
  EXPECT_EQ(call({"dimension", "--json", "{"}).code, kParse);
  const auto bad = call({"member", "--gens", "4,7,9", "--expr", "X^("});
  EXPECT_EQ(bad.code, kParse);
  EXPECT_NE(bad.err.find("position 3"), std::string::npos);
  EXPECT_EQ(call({"--help"}).code, kOk);
  EXPECT_FALSE(call({"--help"}).out.empty());
}

TEST(Cli, OutputIsValidJsonAndDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"semigroup", "--gens", "5,8,11"},
      {"member", "--gens", "5,8,11", "--expr", "X^5/(1 - X^8)"},
      {"dimension", "--full-cone", "3"},
      {"thm56", "--n", "3", "--m", "1"},
      {"oracle", "--gens", "3,5", "--expr", "1/(X^3 - X^6)", "--seed", "7"},
  };
  for (const auto& c : commands) {
    const auto a = call(c);
    const auto b = call(c);
    ASSERT_EQ(a.code, kOk) << a.err;
    ASSERT_EQ(a.out, b.out);
    ASSERT_NO_THROW(nlohmann::json::parse(a.out));
  }
}

}  // namespace
}  // namespace recip::cli
