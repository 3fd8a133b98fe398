#include "ezeta/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

#include "ezeta/verify.hpp"

namespace ezeta {
namespace {

using json = nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ezeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("0.1+1.2i"), std::complex<double>(0.1, 1.2));
  EXPECT_EQ(parse_complex("-0.5-2i"), std::complex<double>(-0.5, -2.0));
  EXPECT_EQ(parse_complex("3"), std::complex<double>(3.0, 0.0));
  EXPECT_EQ(parse_complex("i"), std::complex<double>(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), std::complex<double>(0.0, -1.0));
  EXPECT_EQ(parse_complex("2.5i"), std::complex<double>(0.0, 2.5));
  EXPECT_EQ(parse_complex("-3i"), std::complex<double>(0.0, -3.0));
  EXPECT_EQ(parse_complex("2+i"), std::complex<double>(2.0, 1.0));
  EXPECT_EQ(parse_complex("1e-3+1e1i"), std::complex<double>(1e-3, 10.0));
  for (const char* bad : {"", "1 + 2i", "2i+1", "abc", "1+2", "1+2j", "2+i3", "1.2.3"})
    EXPECT_THROW(parse_complex(bad), std::invalid_argument) << bad;
}

TEST(Cli, TableRowFour) {
  const auto r = run({"table", "--max-n", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 6u);
  EXPECT_EQ(j["rows"][3]["n"], 4);
  EXPECT_EQ(j["rows"][3]["phi"], "5/336 g2^2");
  EXPECT_EQ(j["rows"][3]["psi"], "-1/7 g3");
  EXPECT_TRUE(j["rows"][1]["f"].is_null());
  EXPECT_EQ(j["rows"][5]["phi"], "15/4928 g2^3 + 1/55 g3^2");
  EXPECT_EQ(j["rows"][5]["f"], "-25/464 g2^2/g3 - 28/87 g3/g2");
}

TEST(Cli, TableTextAndLatex) {
  auto r = run({"table", "--max-n", "3", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Psi = -3/20 g2"), std::string::npos);
  r = run({"table", "--max-n", "3", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\\begin{array}"), std::string::npos);
  EXPECT_NE(r.out.find("-3/20 g_2"), std::string::npos);
}

TEST(Cli, EvalHnTwoIsTau) {
  const auto r = run({"eval", "h_n:2", "--tau", "0.1+1.2i"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["value"]["re"].get<double>(), 0.1);
  EXPECT_EQ(j["value"]["im"].get<double>(), 1.2);
  EXPECT_FALSE(j.contains("z"));
}

TEST(Cli, EvalPoleIsInf) {
  const auto r = run({"eval", "wp", "--tau", "0.3+1.1i", "--z", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["value"], "inf");
}

TEST(Cli, EvalAllFunctions) {
  for (const char* fn : {"wp", "wp_prime", "zeta", "eta1", "eta2", "g2", "g3", "G2", "E2", "delta", "f_n:3", "h_n:4"}) {
    const auto r = run({"eval", fn, "--tau", "0.1+1.2i", "--z", "0.2+0.3i"});
    EXPECT_EQ(r.code, 0) << fn << r.err;
    EXPECT_TRUE(json::parse(r.out)["value"].is_object()) << fn;
  }
  const auto r = run({"eval", "G2", "--tau", "i"});
  EXPECT_NEAR(json::parse(r.out)["value"]["re"].get<double>(), 3.14159265358979, 1e-12);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"eval", "wp", "--tau", "0.1+1.2i"}).code, 2);      // missing --z
  EXPECT_EQ(run({"eval", "wp", "--tau", "0.1-1.2i", "--z", "0.1"}).code, 2);
  EXPECT_EQ(run({"eval", "nope", "--tau", "i"}).code, 2);
  EXPECT_EQ(run({"eval", "f_n:0", "--tau", "i"}).code, 2);
  EXPECT_EQ(run({"table"}).code, 2);
  EXPECT_EQ(run({"table", "--max-n", "3", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"--terms", "0", "eval", "g2", "--tau", "i"}).code, 2);
  EXPECT_EQ(run({"--tol", "2", "table", "--max-n", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--group", "Gamma7(2)"}).code, 2);
  EXPECT_EQ(run({"correspond", "--equivariant", "identity", "--direction", "to-form"}).code, 2);
  EXPECT_EQ(run({"correspond", "--form", "g2", "--direction", "to-form"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, QuasiPeriods) {
  const auto r = run({"quasiperiods", "--tau", "i", "--zeta", "Z_n:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["H1"]["re"].get<double>(), -3.14159265358979, 1e-12);
  EXPECT_LT(std::abs(j["legendre_defect"]["re"].get<double>()), 1e-12);
  EXPECT_EQ(run({"quasiperiods", "--tau", "i"}).code, 0);
}

TEST(Cli, Correspond) {
  auto r = run({"correspond", "--form", "f_n:3", "--direction", "to-equivariant"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["samples"].size(), 5u);
  EXPECT_TRUE(j["roundtrip_ok"].get<bool>());

  r = run({"correspond", "--form", "gamma0_stock:2", "--direction", "to-zeta"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["result"]["weight"], -1);
  EXPECT_EQ(j["result"]["group"], "Gamma0(2)");

  r = run({"correspond", "--equivariant", "eta_ratio", "--direction", "to-form"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_LT(std::abs(j["samples"][0]["value"]["re"].get<double>()), 1e-12);
}

TEST(Cli, VerifyLegendre) {
  const auto r = run({"verify", "--suite", "legendre", "--samples", "100"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_LT(j["criteria"][0]["measured"].get<double>(), 1e-8);
}

TEST(Cli, VerifyOverSubgroup) {
  const auto r = run({"verify", "--suite", "weights", "--group", "Gamma0(3)", "--samples", "30"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["group"], "Gamma0(3)");
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"--seed", "7", "verify", "--suite", "triangle"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> corr{"correspond", "--form", "delta", "--direction", "to-equivariant"};
  EXPECT_EQ(run(corr).out, run(corr).out);
}

TEST(Cli, TextOutput) {
  const auto r = run({"--output", "text", "eval", "E2", "--tau", "i"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value = 0.95492965855137"), std::string::npos) << r.out;
}

TEST(Verify, SuitesAndIds) {
  EXPECT_EQ(suite_criteria("all").size(), 12u);
  EXPECT_THROW(suite_criteria("nope"), std::invalid_argument);
  EXPECT_THROW(run_criterion(0), std::out_of_range);
  EXPECT_THROW(run_criterion(13), std::out_of_range);
  const auto r = run_criterion(2);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.measured, 0.0);
}

}  // namespace
}  // namespace ezeta
