#include <unistd.h>

#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"
#include "support/oracles.hpp"
#include "tipsum/oracle.hpp"

namespace tipsum {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "", const cli::Hooks& hooks = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err, hooks);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

TEST(CliMomentTest, SinglePower) {
  const auto r = invoke({"moment", "-K", "2"}, "3\n1\n4\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r.out);
  EXPECT_EQ(j["N"], 3);
  ASSERT_EQ(j["results"].size(), 1u);
  EXPECT_EQ(j["results"][0]["K"], 2);
  EXPECT_EQ(j["results"][0]["S"], "17");
  EXPECT_EQ(j["results"][0]["ops"]["constant_mults"], 3);
  EXPECT_EQ(j["results"][0]["ops"]["additions"], 8);
  EXPECT_EQ(j["results"][0]["ops"]["general_mults"], 0);
}

TEST(CliMomentTest, PlainSumAndMultiplePowers) {
  EXPECT_EQ(parse(invoke({"moment", "--power", "0"}, "5\n7\n").out)["results"][0]["S"], "12");
  const auto j = parse(invoke({"moment", "-K", "0", "-K", "1", "-K", "2"}, "1\n1\n1\n1\n").out);
  ASSERT_EQ(j["results"].size(), 3u);
  EXPECT_EQ(j["results"][0]["S"], "4");
  EXPECT_EQ(j["results"][1]["S"], "6");
  EXPECT_EQ(j["results"][2]["S"], "14");
  EXPECT_EQ(j["results"][0]["ops"]["additions"], 3);
  EXPECT_EQ(j["pass_ops"]["additions"], 9);
}

TEST(CliMomentTest, CommentsBlanksAndWhitespace) {
  const auto r = invoke({"moment", "-K", "2"}, "# header\n\n  3 \n\t1\n# mid\n4\r\n\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r.out)["results"][0]["S"], "17");
}

TEST(CliMomentTest, HugeValuesStayExact) {
  const std::string big = "123456789012345678901234567890";
  const auto r = invoke({"moment", "-K", "3"}, "0\n" + big + "\n-" + big + "\n" + big + "\n");
  ASSERT_EQ(r.code, 0);
  const std::vector<ExactInt> v = {ExactInt(0), *ExactInt::parse(big), *ExactInt::parse("-" + big),
                                   *ExactInt::parse(big)};
  EXPECT_EQ(parse(r.out)["results"][0]["S"], oracle::direct_sum(v, 3).to_string());
}

TEST(CliMomentTest, ParseErrorReportsLine) {
  const auto r = invoke({"moment", "-K", "1"}, "1\n2\nthree\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"moment", "-K", "1"}, "1.5\n").code, 2);
}

TEST(CliMomentTest, EmptyInput) {
  EXPECT_EQ(invoke({"moment", "-K", "1"}, "").code, 3);
  EXPECT_EQ(invoke({"moment", "-K", "1"}, "# only a comment\n\n").code, 3);
}

TEST(CliMomentTest, UsageErrors) {
  EXPECT_EQ(invoke({"moment"}, "1\n").code, 2);
  EXPECT_EQ(invoke({"moment", "-K", "-1"}, "1\n").code, 2);
  EXPECT_EQ(invoke({"moment", "-K", "1", "--format", "xml"}, "1\n").code, 2);
  EXPECT_EQ(invoke({"moment", "-K", "1", "--input", "/nonexistent/file"}, "").code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(CliMomentTest, LengthOverride) {
  EXPECT_EQ(invoke({"moment", "-K", "2", "-N", "3"}, "3\n1\n4\n").code, 0);
  const auto r = invoke({"moment", "-K", "2", "--length", "4"}, "3\n1\n4\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("declared length 4"), std::string::npos);
}

TEST(CliMomentTest, OtherFormats) {
  EXPECT_EQ(invoke({"moment", "-K", "0", "-K", "2", "--format", "csv"}, "3\n1\n4\n").out, "K,N,S\n0,3,8\n2,3,17\n");
  EXPECT_EQ(invoke({"moment", "-K", "2", "--format", "plain"}, "3\n1\n4\n").out, "K=2 N=3 S=17\n");
}

TEST(CliMomentTest, FloatMode) {
  const auto r = invoke({"moment", "-K", "2", "--float"}, "3\n1\n4.5\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r.out);
  EXPECT_EQ(j["results"][0]["S"], "19");
  EXPECT_TRUE(j.contains("warning"));
  EXPECT_EQ(invoke({"moment", "-K", "2", "--float"}, "abc\n").code, 2);
}

TEST(CliMomentTest, ReadsFromFile) {
  char path[] = "/tmp/tipsum_cli_testXXXXXX";
  const int fd = mkstemp(path);
  ASSERT_GE(fd, 0);
  const std::string data = "3\n1\n4\n";
  ASSERT_EQ(write(fd, data.data(), data.size()), static_cast<ssize_t>(data.size()));
  close(fd);
  const auto r = invoke({"moment", "-K", "2", "--input", path});
  std::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r.out)["results"][0]["S"], "17");
}

TEST(CliCoeffsTest, Examples) {
  auto j = parse(invoke({"coeffs", "-K", "2", "-N", "3"}).out);
  EXPECT_EQ(j["coefficients"], nlohmann::json({"9", "-7", "2"}));
  EXPECT_TRUE(j["unique"].get<bool>());
  EXPECT_FALSE(j.contains("note"));

  j = parse(invoke({"coeffs", "-K", "0", "-N", "17"}).out);
  EXPECT_EQ(j["coefficients"], nlohmann::json({"1"}));

  j = parse(invoke({"coeffs", "-K", "3", "-N", "2"}).out);
  EXPECT_EQ(j["coefficients"], nlohmann::json({"8", "-19", "18", "-6"}));
  EXPECT_FALSE(j["unique"].get<bool>());
  EXPECT_TRUE(j.contains("note"));

  EXPECT_EQ(invoke({"coeffs", "-K", "1", "-N", "5", "--format", "csv"}).out, "k,c\n1,5\n2,-1\n");
  EXPECT_NE(invoke({"coeffs", "-K", "3", "-N", "2", "--format", "plain"}).out.find("note:"), std::string::npos);
}

TEST(CliCoeffsTest, InvalidArguments) {
  EXPECT_EQ(invoke({"coeffs", "-K", "2", "-N", "0"}).code, 2);
  EXPECT_EQ(invoke({"coeffs", "-K", "-2", "-N", "3"}).code, 2);
  EXPECT_EQ(invoke({"coeffs", "-K", "2"}).code, 2);
  EXPECT_EQ(invoke({"coeffs", "-K", "x", "-N", "3"}).code, 2);
}

TEST(CliTableTest, Cells) {
  EXPECT_EQ(invoke({"table", "--kmax", "0"}).out, "K\tc_1(N)\n0\t1\n");
  const std::string t = invoke({"table"}).out;
  EXPECT_NE(t.find("\t-24N-36\t"), std::string::npos);
  EXPECT_NE(t.find("\t20N^3+60N^2+70N+30\t"), std::string::npos);
  EXPECT_EQ(invoke({"table", "--kmax", "-1"}).code, 2);
}

TEST(CliComplexityTest, Defaults) {
  const auto r = invoke({"complexity"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "K,N,method,general_mults,constant_mults,additions");
  std::set<std::pair<int, long>> pairs;
  std::set<std::string> proposed_constant;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string k, n, method, g, c, a;
    std::getline(cells, k, ',');
    std::getline(cells, n, ',');
    std::getline(cells, method, ',');
    std::getline(cells, g, ',');
    std::getline(cells, c, ',');
    pairs.emplace(std::stoi(k), std::stol(n));
    if (method == "proposed") proposed_constant.insert(c);
  }
  EXPECT_EQ(pairs.size(), 3u * 4u);
  EXPECT_EQ(proposed_constant, (std::set<std::string>{"3", "5", "8"}));
}

TEST(CliComplexityTest, ExplicitLists) {
  EXPECT_EQ(invoke({"complexity", "--Ks", "0", "--Ns", "1"}).out,
            "K,N,method,general_mults,constant_mults,additions\n"
            "0,1,proposed,0,1,0\n0,1,baseline,0,0,0\n0,1,baseline_chain,0,0,0\n");
  const auto r = invoke({"complexity", "--Ks", "7", "--Ns", "1000"});
  EXPECT_NE(r.out.find("7,1000,baseline_chain,4000,0,999"), std::string::npos);
  EXPECT_EQ(invoke({"complexity", "--Ks", "2", "--Ns", "0"}).code, 2);
}

TEST(CliSelfcheckTest, HealthyAndDeterministic) {
  const auto a = invoke({"selfcheck", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(parse(a.out)["status"], "all checks passed");
  const auto b = invoke({"selfcheck", "--seed", "7"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CliSelfcheckTest, CorruptedCoefficientsAreCaught) {
  cli::Hooks hooks;
  hooks.coefficients = [](int power, std::int64_t length) {
    CoefficientSet c = coefficients_closed(power, length);
    if (power == 3 && length == 5) c.values[1] += ExactInt(1);
    return c;
  };
  const auto r = invoke({"selfcheck", "--seed", "7"}, "", hooks);
  EXPECT_EQ(r.code, 1);
  const auto j = parse(r.out);
  EXPECT_EQ(j["status"], "failed");
  const auto& first = j["checks"][0];
  EXPECT_EQ(first["name"], "oracle_equivalence");
  EXPECT_FALSE(first["passed"].get<bool>());
  EXPECT_EQ(first["counterexample"]["K"], 3);
  EXPECT_EQ(first["counterexample"]["N"], 5);
  EXPECT_EQ(first["counterexample"]["v"].size(), 5u);
}

TEST(CliHelpTest, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("moment"), std::string::npos);
}

// Runs the real binary behind a pipe so the input is not seekable.
TEST(CliProcessTest, StreamsFromPipe) {
  const std::string cmd = "seq -5 20000 | " TIPSUM_CLI_PATH " moment -K 1 -K 2 --format csv";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, p) != nullptr) out += buf;
  ASSERT_EQ(pclose(p), 0);
  std::vector<ExactInt> v;
  for (int i = -5; i <= 20000; ++i) v.emplace_back(i);
  EXPECT_EQ(out, "K,N,S\n1,20006," + oracle::direct_sum(v, 1).to_string() + "\n2,20006," +
                     oracle::direct_sum(v, 2).to_string() + "\n");
}

}  // namespace
}  // namespace tipsum
