#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <set>
#include <sstream>

#include "taylor/cli.hpp"
#include "taylor/laws.hpp"
#include "taylor/scalar.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "taylor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = taylor::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ExpandCube) {
  const CliRun r = cli({"expand", "--expr", "x0^3", "--point", "1", "--jet", "1,2", "--order", "2", "--method", "direct",
                     "--scalar", "rational"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "c0 = 1\nc1 = 3\nc2 = 9\n");
}

TEST(Cli, ExpandExpFloatJson) {
  const CliRun r = cli({"expand", "--expr", "exp(x0)", "--point", "0", "--order", "3", "--scalar", "f64", "--output",
                     "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["order"], 3);
  EXPECT_EQ(doc["method"], "operational");
  const double expected[] = {1.0, 1.0, 0.5, 1.0 / 6.0};
  for (int k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(doc["coeffs"][k][0].get<double>(), expected[k]);
}

TEST(Cli, OrderZero) {
  const CliRun r = cli({"expand", "--expr", "(x0*x1, x0 - x1)", "--point", "2,5", "--order", "0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "c0 = (10, -3)\n");
}

TEST(Cli, JsonRoundTripsRationals) {
  const CliRun r = cli({"expand", "--expr", "x0/3 + x1^2", "--point", "1/2,-3/4", "--jet", "1,2;1/5,0", "--order", "3",
                     "--output", "json", "--method", "tower"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  // (1/2 + e + e^2/5)/3 + (-3/4 + 2e)^2
  const std::vector<taylor::Rational> expected{taylor::Rational(1, 6) + taylor::Rational(9, 16),
                                               taylor::Rational(1, 3) - taylor::Rational(3),
                                               taylor::Rational(1, 15) + taylor::Rational(4), taylor::Rational(0)};
  ASSERT_EQ(doc["coeffs"].size(), 4U);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(taylor::Rational::parse(doc["coeffs"][k][0].get<std::string>()), expected[k]) << k;
  }
}

TEST(Cli, DefaultDirectionIsOnes) {
  const CliRun r = cli({"expand", "--expr", "x0*x1", "--point", "2,3", "--order", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "c0 = 6\nc1 = 5\nc2 = 1\n");
}

TEST(Cli, CompareAgreesAndReportsBis) {
  const CliRun r = cli({"compare", "--expr", "x0^3", "--point", "1", "--jet", "1,2", "--order", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("all methods agree"), std::string::npos);
  EXPECT_NE(r.out.find("bis differs from direct from coefficient 2"), std::string::npos);
  EXPECT_NE(r.out.find("12"), std::string::npos);
}

TEST(Cli, CompareFloatTranscendental) {
  const CliRun r = cli({"compare", "--expr", "sin(x0)*exp(x0)", "--point", "0.3", "--order", "5", "--scalar", "f64"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(cli({"compare", "--expr", "sin(x0)", "--point", "1", "--scalar", "rational"}).code, 64);
  EXPECT_EQ(cli({"expand", "--expr", "x0*x1", "--point", "1"}).code, 64);
  EXPECT_EQ(cli({"expand", "--expr", "x0", "--point", "1", "--method", "magic"}).code, 64);
  EXPECT_EQ(cli({"expand", "--expr", "x0", "--point", "1", "--order", "9", "--method", "direct"}).code, 64);
  EXPECT_EQ(cli({"expand", "--expr", "x0", "--point", "1", "--jet", "1,2,3", "--order", "2"}).code, 64);
  EXPECT_EQ(cli({"expand", "--expr", "x0+x1", "--point", "1,2", "--jet", "1,2,3"}).code, 64);
  EXPECT_EQ(cli({"expand", "--expr", "x0", "--point", "abc"}).code, 64);
  EXPECT_EQ(cli({"expand", "--expr", "x0", "--point", "1", "--scalar", "complex"}).code, 64);
  EXPECT_EQ(cli({"unknown"}).code, 64);
  EXPECT_EQ(cli({}).code, 64);
}

TEST(Cli, InputErrors) {
  const CliRun parse = cli({"expand", "--expr", "x0 +* 2", "--point", "1"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("1:"), std::string::npos);
  EXPECT_EQ(cli({"expand", "--expr", "ln(x0)", "--point", "0", "--scalar", "rational"}).code, 64);
  EXPECT_EQ(cli({"expand", "--expr", "1/x0", "--point", "0"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("expand"), std::string::npos);
}

TEST(Cli, LawsFilterAndDeterminism) {
  const CliRun a = cli({"laws", "--laws", "monad-unit", "--cases", "20", "--seed", "7"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_NE(a.out.find("PASS jet-monad-unit"), std::string::npos);
  EXPECT_NE(a.out.find("PASS tower-monad-unit"), std::string::npos);
  EXPECT_EQ(a.out.find("faa-di-bruno"), std::string::npos);
  const CliRun b = cli({"laws", "--laws", "monad-unit", "--cases", "20", "--seed", "7"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, LawsSeedFromEnvironment) {
  ::setenv("TAYLOR_SEED", "42", 1);
  const CliRun r = cli({"laws", "--laws", "stree-unit", "--cases", "5"});
  ::unsetenv("TAYLOR_SEED");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("seed 42,", 0), 0U) << r.out;
}

TEST(Cli, InjectedFaultNamesStreeExplicit) {
  const CliRun r = cli({"laws", "--inject-fault", "--cases", "20"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL stree-explicit"), std::string::npos);
  EXPECT_NE(r.out.find("reproducer: seed 1, case"), std::string::npos);
}

TEST(Cli, UnknownLawFilter) { EXPECT_EQ(cli({"laws", "--laws", "no-such-law"}).code, 64); }

TEST(Laws, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& law : taylor::law_registry()) EXPECT_TRUE(names.insert(law.name).second) << law.name;
  EXPECT_GE(names.size(), 40U);
}

TEST(Laws, FilteringDoesNotChangeInstances) {
  taylor::LawRunOptions all;
  all.cases = 10;
  all.seed = 3;
  taylor::LawRunOptions one = all;
  one.filter = "stree-explicit";
  one.context.inject_fault = true;
  all.context.inject_fault = true;
  std::string from_all;
  for (const auto& o : taylor::run_laws(all)) {
    if (o.name == "stree-explicit") from_all = o.reproducer;
  }
  const auto single = taylor::run_laws(one);
  ASSERT_EQ(single.size(), 1U);
  EXPECT_FALSE(single[0].passed);
  EXPECT_EQ(single[0].reproducer, from_all);
}
