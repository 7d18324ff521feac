#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "monotri/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = monotri::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, HmtCountBrute) {
  const auto r = run({"hmt", "count", "--rows", "4", "--max", "2", "--bottom", "1,2", "--method", "brute"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, MtCount) { EXPECT_EQ(run({"mt", "count", "--bottom", "1,2,3"}).out, "7\n"); }

TEST(Cli, AsmCountProduct) { EXPECT_EQ(run({"asm", "count", "--size", "4", "--method", "product"}).out, "42\n"); }

TEST(Cli, HmtPoly) {
  EXPECT_EQ(run({"hmt", "poly", "--rows", "2", "--target", "gamma"}).out, "x - k1 + 1\n");
  EXPECT_EQ(run({"hmt", "poly", "--rows", "1", "--target", "gamma"}).out, "1\n");
  EXPECT_EQ(run({"hmt", "poly", "--rows", "3", "--target", "gamma_star"}).out,
            "-k1 * x + k2 * x + 1/2 * k1^2 - 1/2 * k2^2 - 1/2 * k1 + 1/2 * k2\n");
}

TEST(Cli, PolyGuard) {
  const auto r = run({"hmt", "poly", "--rows", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--unsafe-sizes"), std::string::npos);
}

TEST(Cli, AllHmtMethodsAgree) {
  for (const char* m : {"brute", "recursion", "theorem", "beta", "gamma-bar"}) {
    const auto r = run({"hmt", "count", "--rows", "5", "--max", "4", "--bottom", "1,2,4", "--method", m, "--crosscheck"});
    EXPECT_EQ(r.code, 0) << m << r.err;
    EXPECT_EQ(r.out, run({"hmt", "count", "--rows", "5", "--max", "4", "--bottom", "1,2,4"}).out) << m;
  }
}

TEST(Cli, WeakCount) {
  const auto j = run_json({"hmt", "count", "--rows", "3", "--max", "3", "--bottom", "1,2", "--weak", "--crosscheck"});
  EXPECT_EQ(j["result"], "5");
  EXPECT_EQ(j["method"], "beta+brute");
}

TEST(Cli, JsonEnvelope) {
  const auto j = run_json({"asm", "count", "--size", "6", "--crosscheck"});
  ASSERT_TRUE(j.is_object());
  EXPECT_EQ(j["result"], "7436");
  EXPECT_TRUE(j["result"].is_string());
  EXPECT_EQ(j["query"]["command"], "asm count");
  EXPECT_EQ(j["query"]["size"], 6);
  EXPECT_EQ(j["method"], "product+enumerate");
  EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
  EXPECT_TRUE(j["warnings"].is_array());
}

TEST(Cli, BigIntegersStayExact) {
  const auto j = run_json({"asm", "count", "--size", "30"});
  EXPECT_TRUE(j["result"].is_string());
  EXPECT_GT(j["result"].get<std::string>().size(), 60u);
}

TEST(Cli, FormatFromEnvironment) {
  setenv("MONOTRI_FORMAT", "json", 1);
  const auto r = run({"mt", "count", "--bottom", "1,2"});
  unsetenv("MONOTRI_FORMAT");
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"], "2");
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "monotri_cli_test.json";
  const auto r = run({"vsasm", "count", "--size", "5", "--format", "json", "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["result"], "3");
  std::filesystem::remove(path);
}

TEST(Cli, VsasmMethods) {
  for (const char* m : {"brute", "hmt", "product"}) {
    EXPECT_EQ(run({"vsasm", "count", "--size", "7", "--method", m}).out, "26\n") << m;
  }
  EXPECT_EQ(run({"vsasm", "count", "--size", "4"}).code, 2);
}

TEST(Cli, AsmMethods) {
  for (const char* m : {"enumerate", "alpha", "constant-term", "product"}) {
    EXPECT_EQ(run({"asm", "count", "--size", "5", "--method", m, "--crosscheck"}).out, "429\n") << m;
  }
  EXPECT_EQ(run({"asm", "count", "--size", "7", "--method", "enumerate"}).code, 2);
}

TEST(Cli, GfCoeff) {
  EXPECT_EQ(run({"gf", "coeff", "--family", "mt", "--rows", "3", "--exponents", "3,2,1"}).out, "-1\n");
  EXPECT_EQ(run({"gf", "coeff", "--family", "mt", "--rows", "3", "--exponents=-1,2,3"}).out, "7\n");
  EXPECT_EQ(run({"gf", "coeff", "--family", "asm-constant-term", "--rows", "4"}).out, "42\n");
  const auto j = run_json({"gf", "coeff", "--family", "hmt", "--rows", "3", "--max", "3", "--exponents", "3,5"});
  EXPECT_EQ(j["warnings"].size(), 1u);
  EXPECT_EQ(run({"gf", "coeff", "--family", "hmt", "--rows", "3", "--exponents", "1,2"}).code, 2);
}

TEST(Cli, MtNegativeBottomAlphaVersusBrute) {
  const auto r = run({"mt", "count", "--bottom=-1,2,3", "--crosscheck"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "23\n");
}

TEST(Cli, InvalidInputs) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"hmt", "count", "--rows", "3", "--max", "3", "--bottom", "2,1"}).code, 2);
  EXPECT_EQ(run({"hmt", "count", "--rows", "3", "--max", "3", "--bottom", "1"}).code, 2);
  EXPECT_EQ(run({"hmt", "count", "--rows", "3", "--max", "1", "--bottom", "1,2"}).code, 2);
  EXPECT_EQ(run({"hmt", "count", "--rows", "3", "--max", "3", "--bottom", "1,2", "--frobnicate"}).code, 2);
  EXPECT_EQ(run({"mt", "count", "--bottom", "2,2"}).code, 2);
  EXPECT_EQ(run({"asm", "count", "--size", "0"}).code, 2);
  EXPECT_EQ(run({"asm", "count", "--size", "3", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--max-rows", "12"}).code, 2);
}

TEST(Cli, VerifyRecursion) {
  const auto r = run({"verify", "--suite", "recursion", "--max-rows", "5", "--max-x", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS recursion.brute_equals_recursion"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyGenfunJson) {
  const auto j = run_json({"verify", "--suite", "genfun"});
  EXPECT_TRUE(j["result"]["passed"].get<bool>());
  bool found = false;
  for (const auto& p : j["result"]["properties"]) found = found || p["name"] == "genfun.fixtures";
  EXPECT_TRUE(found);
}

TEST(Cli, DeterministicEnvelopes) {
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed_ms");
    return j.dump();
  };
  const std::vector<std::string> args{"verify", "--suite", "symmetry", "--seed", "7"};
  EXPECT_EQ(strip(run_json(args)), strip(run_json(args)));
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hmt"), std::string::npos);
}
