#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsum_cli.hpp"

namespace dsum::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dsum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliDedekind, Methods) {
  auto r = Invoke({"dedekind", "2", "3", "--method", "fast"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "-1/18\n");
  EXPECT_EQ(Invoke({"dedekind", "1", "1"}).out, "0\n");
  EXPECT_EQ(Invoke({"dedekind", "5", "7", "--method", "sawtooth"}).out, "-1/14\n");
  auto c = Invoke({"dedekind", "2", "3", "--method", "cotangent"});
  EXPECT_EQ(c.code, kOk);
  EXPECT_NEAR(std::stod(c.out), -1.0 / 18.0, 1e-11);
}

TEST(CliDedekind, NonCoprime) {
  auto r = Invoke({"dedekind", "4", "6"});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_NE(r.err.find("gcd(4,6)=2"), std::string::npos);
}

TEST(CliDedekind, BadArguments) {
  EXPECT_EQ(Invoke({"dedekind", "x", "3"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"dedekind", "0", "3"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"dedekind", "2"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"dedekind", "2", "3", "--method", "magic"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"dedekind", "2", "3", "--json", "--csv"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({}).code, kInvalidInput);
}

TEST(CliDedekind, HugeInputsUseFastPathOrHitGuard) {
  std::string a = "1" + std::string(200, '0') + "1";   // 10^201 + 1
  std::string b = "7" + std::string(199, '3');
  auto r = Invoke({"dedekind", a, b, "--method", "fast"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Invoke({"dedekind", a, b, "--method", "sawtooth"}).code, kTooLarge);
  EXPECT_EQ(Invoke({"dedekind", a, b, "--method", "cotangent"}).code, kTooLarge);
}

TEST(CliReciprocity, Text) {
  auto r = Invoke({"reciprocity", "2", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "s(2,3) = -1/18\ns(3,2) = 0\nlhs = -1/18\nrhs = -1/18\nHOLDS\n");
  auto one = Invoke({"reciprocity", "1", "1"});
  EXPECT_NE(one.out.find("lhs = 0\nrhs = 0\nHOLDS"), std::string::npos);
}

TEST(CliReciprocity, JsonRoundTrip) {
  auto r = Invoke({"reciprocity", "5", "7", "--json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["s_ab"], "-1/14");
  EXPECT_EQ(j["holds"], true);
  for (const char* key : {"s_ab", "s_ba", "lhs", "rhs"}) {
    std::string text = j[key];
    EXPECT_EQ(Rational::parse(text).to_string(), text) << key;
  }
  EXPECT_EQ(Rational::parse(j["lhs"].get<std::string>()), Rational::parse(j["rhs"].get<std::string>()));
}

TEST(CliReciprocity, TextAndJsonCarrySameValues) {
  auto text = Invoke({"reciprocity", "13", "21"}).out;
  auto j = nlohmann::json::parse(Invoke({"reciprocity", "13", "21", "--json"}).out);
  EXPECT_NE(text.find("s(13,21) = " + j["s_ab"].get<std::string>() + "\n"), std::string::npos);
  EXPECT_NE(text.find("s(21,13) = " + j["s_ba"].get<std::string>() + "\n"), std::string::npos);
  EXPECT_NE(text.find("lhs = " + j["lhs"].get<std::string>() + "\n"), std::string::npos);
  EXPECT_NE(text.find("rhs = " + j["rhs"].get<std::string>() + "\n"), std::string::npos);
}

TEST(CliReciprocity, CsvRow) {
  auto r = Invoke({"reciprocity", "2", "3", "--csv"});
  EXPECT_EQ(r.out, "a,b,s_ab,s_ba,lhs,rhs,holds\n2,3,-1/18,0,-1/18,-1/18,true\n");
}

TEST(CliEhrhart, Polynomial) {
  EXPECT_EQ(Invoke({"ehrhart", "2", "3"}).out, "3t^2 + 3t + 1\n");
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--count", "1"}).out, "7\n");
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--coeff", "1"}).out, "3\n");
  auto j = nlohmann::json::parse(Invoke({"ehrhart", "1", "1", "--json"}).out);
  EXPECT_EQ(j["coefficients"], (std::vector<std::string>{"1", "3/2", "1/2"}));
}

TEST(CliEhrhart, Laurent) {
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--laurent", "--coeff", "0"}).out, "1.000000000 (im 0.0e0)\n");
  auto r = Invoke({"ehrhart", "2", "3", "5", "--laurent", "--json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["laurent"].size(), 4u);
  EXPECT_NEAR(j["laurent"][3]["re"].get<double>(), 5.0, 1e-9);
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--laurent", "--truncation", "0"}).code, kInvalidInput);
}

TEST(CliEhrhart, Errors) {
  EXPECT_EQ(Invoke({"ehrhart", "2", "4"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--coeff", "3"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"ehrhart", "101", "103", "107", "--count", "100"}).code, kTooLarge);
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--count", "1", "--laurent"}).code, kInvalidInput);
}

TEST(CliEhrhart, LimitFromEnvironment) {
  ::setenv(kLimitEnvVar, "5", 1);
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--count", "3"}).code, kTooLarge);
  ::setenv(kLimitEnvVar, "abc", 1);
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--count", "3"}).code, kInvalidInput);
  ::unsetenv(kLimitEnvVar);
  EXPECT_EQ(Invoke({"ehrhart", "2", "3", "--count", "3"}).code, kOk);
}

TEST(CliDecompose, Outputs) {
  EXPECT_EQ(Invoke({"decompose", "2", "3"}).out,
            "contrib_a = 2/9\ncontrib_b = 1/8\ncontrib_triple = 47/72\ntotal = 1\n");
  EXPECT_EQ(Invoke({"decompose", "1", "1"}).out,
            "contrib_a = 0\ncontrib_b = 0\ncontrib_triple = 1\ntotal = 1\n");
  auto j = nlohmann::json::parse(Invoke({"decompose", "2", "3", "--json"}).out);
  EXPECT_EQ(j["contrib_triple"], "47/72");
  EXPECT_EQ(j["total"], "1");
}

TEST(CliSweep, SmallTable) {
  auto r = Invoke({"sweep", "1..3", "1..3"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "a,b,s_ab,s_ba,lhs,rhs,holds\n"
            "1,1,0,0,0,0,true\n"
            "1,2,0,0,0,0,true\n"
            "1,3,1/18,0,1/18,1/18,true\n"
            "2,1,0,0,0,0,true\n"
            "2,3,-1/18,0,-1/18,-1/18,true\n"
            "3,1,0,1/18,1/18,1/18,true\n"
            "3,2,0,-1/18,-1/18,-1/18,true\n");
}

TEST(CliSweep, EmptyRangeIsHeaderOnly) {
  EXPECT_EQ(Invoke({"sweep", "3..1", "1..3"}).out, "a,b,s_ab,s_ba,lhs,rhs,holds\n");
}

TEST(CliSweep, FileOutputAndIoError) {
  auto path = std::filesystem::temp_directory_path() / "dsum_cli_test_sweep.csv";
  auto r = Invoke({"sweep", "1..40", "1..40", "--out", path.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::ifstream in(path);
  std::string line;
  std::size_t rows = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "a,b,s_ab,s_ba,lhs,rhs,holds");
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "true");
  }
  std::size_t coprime = 0;
  for (std::int64_t a = 1; a <= 40; ++a)
    for (std::int64_t b = 1; b <= 40; ++b) coprime += gcd(a, b) == 1;
  EXPECT_EQ(rows, coprime);
  std::filesystem::remove(path);

  EXPECT_EQ(Invoke({"sweep", "1..3", "1..3", "--out", "/nonexistent-dir/x.csv"}).code, kIoError);
  EXPECT_EQ(Invoke({"sweep", "1-3", "1..3"}).code, kInvalidInput);
}

#ifdef DSUM_CLI_PATH
int Shell(const std::string& args) {
  int status = std::system((std::string(DSUM_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(Shell("dedekind 2 3"), 0);
  EXPECT_EQ(Shell("dedekind 4 6"), 2);
  EXPECT_EQ(Shell("ehrhart 101 103 107 --count 100"), 3);
  EXPECT_EQ(Shell("sweep 1..2 1..2 --out /nonexistent-dir/x.csv"), 4);
  EXPECT_EQ(Shell("--help"), 0);
}
#endif

}  // namespace
}  // namespace dsum::cli
