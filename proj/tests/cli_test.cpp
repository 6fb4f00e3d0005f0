#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "wgcd_cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "wgcd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = wgcd::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ComputeExamples) {
  EXPECT_EQ(run({"compute", "--weights", "2,2,3", "--values", "70352,5760,13824"}).out, "4\n");
  EXPECT_EQ(run({"compute", "--weights", "2,3", "--values", "5760,13824"}).out, "24\n");
  EXPECT_EQ(run({"compute", "--weights", "7,5,3,2,9", "--values", "123456,243226,5789534,234566,4322166"}).out, "1\n");
  EXPECT_EQ(run({"compute", "--weights", "2,3", "--values", "-5760,13824"}).out, "24\n");
  EXPECT_EQ(run({"compute", "--weights=2,3", "--values=-5760,13824"}).out, "24\n");
}

TEST(Cli, EveryStrategyGivesTheSameAnswer) {
  for (const char* s : {"auto", "oracle", "full-factor", "gcd-factor", "lcm-power", "fold"}) {
    const Outcome o = run({"compute", "--weights", "2,2,3", "--values", "70352,5760,13824", "--strategy", s});
    EXPECT_EQ(o.code, 0) << s;
    EXPECT_EQ(o.out, "4\n") << s;
  }
}

TEST(Cli, ComputeJson) {
  const Outcome o = run({"compute", "--weights", "2,3", "--values", "5760,13824", "--json"});
  ASSERT_EQ(o.code, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["d"], "24");
  EXPECT_EQ(j["strategy"], "auto");
  EXPECT_TRUE(j["counters"].contains("factor_calls"));
  EXPECT_TRUE(j["counters"].contains("max_factored_bits"));
  EXPECT_TRUE(j["counters"].contains("gcd_calls"));
}

TEST(Cli, PlainAndJsonAgree) {
  const std::vector<std::pair<std::string, std::string>> inputs = {
      {"2,2,3", "70352,5760,13824"}, {"1,1", "12,18"}, {"2,3", "8,4"}, {"3", "-13824"}, {"1,2,3", "0,0,7"}};
  for (const auto& [w, v] : inputs) {
    const Outcome plain = run({"compute", "--weights", w, "--values", v});
    const Outcome json = run({"compute", "--weights", w, "--values", v, "--json"});
    EXPECT_EQ(plain.out, nlohmann::json::parse(json.out)["d"].get<std::string>() + "\n") << v;
  }
}

TEST(Cli, BigValues) {
  const Outcome o = run({"compute", "--weights", "2,3", "--values",
                         "1000000000000000000000000000000000000,1000000000000000000000000000000000000000000000000000000"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "1000000000000000000\n");
}

TEST(Cli, Normalize) {
  EXPECT_EQ(run({"normalize", "--weights", "2,3", "--values", "5760,13824"}).out, "10,1 d=24\n");
  EXPECT_EQ(run({"normalize", "--weights", "2,3", "--values", "-5760,13824"}).out, "-10,1 d=24\n");
  const auto j = nlohmann::json::parse(run({"normalize", "--weights", "2,3", "--values", "5760,13824", "--json"}).out);
  EXPECT_EQ(j["values"], (nlohmann::json{"10", "1"}));
  EXPECT_EQ(j["d"], "24");
}

TEST(Cli, VerifyReasonsAndExitCodes) {
  const std::vector<std::string> base = {"verify", "--weights", "2,2,3", "--values", "70352,5760,13824", "--claim"};
  auto with = [&](const std::string& claim) {
    auto args = base;
    args.push_back(claim);
    return run(args);
  };
  EXPECT_EQ(with("4").code, 0);
  EXPECT_EQ(with("4").out, "ok\n");
  EXPECT_EQ(with("2").code, 1);
  EXPECT_EQ(with("2").out, "maximality\n");
  EXPECT_EQ(with("8").code, 1);
  EXPECT_EQ(with("8").out, "divisibility\n");
  EXPECT_EQ(with("0").code, 2);
  EXPECT_EQ(with("x").code, 2);
  auto args = base;
  args.push_back("2");
  args.push_back("--json");
  const auto j = nlohmann::json::parse(run(args).out);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["reason"], "maximality");
}

TEST(Cli, ExplainShowsIntermediateTuples) {
  const Outcome o = run({"explain", "--weights", "7,5,3,2,9", "--values", "123456,243226,5789534,234566,4322166"});
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("permute: weights=(2,3,5,7,9) values=(234566,5789534,243226,123456,4322166)"), std::string::npos);
  EXPECT_NE(o.out.find("suffix-gcd: weights=(2,3,5,7,9) values=(2,2,2,6,4322166)"), std::string::npos);
  EXPECT_NE(o.out.find("d=1"), std::string::npos);
  const Outcome three = run({"explain", "--weights", "2,2,3", "--values", "70352,5760,13824", "--json"});
  const auto j = nlohmann::json::parse(three.out);
  EXPECT_EQ(j["d"], "4");
  bool found = false;
  for (const auto& s : j["steps"]) {
    if (s["rule"] == "suffix-gcd") {
      found = true;
      EXPECT_EQ(s["values"], (nlohmann::json{"16", "1152", "13824"}));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run({"compute", "--weights", "2,3", "--values", "0,0"}).code, 2);
  EXPECT_EQ(run({"compute", "--weights", "2,3", "--values", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"compute", "--weights", "0,3", "--values", "1,2"}).code, 2);
  EXPECT_EQ(run({"compute", "--weights", "2,3", "--values", "1,abc"}).code, 2);
  EXPECT_EQ(run({"compute", "--weights", "2,3", "--values", "1,2", "--strategy", "magic"}).code, 2);
  EXPECT_EQ(run({"compute", "--weights", "2,3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const Outcome o = run({"compute", "--weights", "2,3", "--values", "0,0"});
  EXPECT_NE(o.err.find("error"), std::string::npos);
}

TEST(Cli, OracleScanCapIsAnError) {
  const Outcome o = run({"compute", "--weights", "1,1", "--strategy", "oracle", "--values",
                         "1000000000000000000000000000,999999999999999999999999999"});
  EXPECT_EQ(o.code, 2);
}

TEST(Cli, SelftestPasses) {
  const Outcome o = run({"selftest"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_NE(o.out.find("PASS"), std::string::npos);
}

TEST(Cli, BenchWritesReports) {
  const auto dir = std::filesystem::temp_directory_path() / "wgcd_cli_test";
  std::filesystem::create_directories(dir);
  const auto spec = dir / "spec.json";
  std::ofstream(spec) << R"([{"seed": 1, "weights": [2, 3], "d_bits": 12, "cofactor_bits": 40},
                             {"seed": 2, "weights": [1, 2, 3], "d_bits": 12, "cofactor_bits": 40, "mode": "adversarial-deficient"}])";
  const auto out = dir / "report.json";
  const Outcome o = run({"bench", "--spec", spec.string(), "--out", out.string(), "--reps", "1"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_TRUE(j[0]["agreement"].get<bool>());

  const Outcome csv = run({"bench", "--spec", spec.string(), "--format", "csv", "--strategy", "auto,fold"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out.rfind(std::string(wgcd::kCsvHeader), 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 5);

  EXPECT_EQ(run({"bench", "--spec", (dir / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"bench", "--spec", spec.string(), "--format", "xml"}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BinaryRunsStandalone) {
  const std::string cmd = std::string(WGCD_CLI_PATH) + " compute --weights 2,3 --values 5760,13824";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  char buf[64] = {};
  const std::size_t n = fread(buf, 1, sizeof buf - 1, pipe);
  const int status = pclose(pipe);
  EXPECT_EQ(std::string(buf, n), "24\n");
  EXPECT_EQ(WEXITSTATUS(status), 0);
  FILE* bad = popen((std::string(WGCD_CLI_PATH) + " compute --weights 2,3 --values 0,0 2>/dev/null").c_str(), "r");
  ASSERT_NE(bad, nullptr);
  EXPECT_EQ(WEXITSTATUS(pclose(bad)), 2);
}

}  // namespace
