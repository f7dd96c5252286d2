#include <gtest/gtest.h>
#include <sys/wait.h>

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("abcgg_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  CliResult run(const std::string& args) {
    const fs::path out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = std::string("\"") + ABCGG_CLI_PATH + "\" " + args + " >\"" +
                            out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ComputePathOfFourVertices) {
  const auto p = file("p4.txt", "p 4\n0 1\n1 2\n2 3\n");
  const CliResult r = run("compute --input " + p.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["abc"].get<double>(), 3 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(j["abc_gg"].get<double>(), 2.3400999430419995, 1e-12);
  EXPECT_EQ(j["wiener"], 10);
}

TEST_F(Cli, ComputeReportsPerIndexErrors) {
  const auto p = file("split.txt", "p 4\n0 1\n2 3\n");
  const CliResult r = run("compute --input " + p.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["abc"].get<double>(), 0.0, 1e-12);
  EXPECT_EQ(j["abc_gg"]["error"], "NotConnected");
  EXPECT_EQ(j["wiener"]["error"], "NotConnected");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("generate --family nope --n 2").code, 2);
  EXPECT_EQ(run("generate --family spiro --q 6 --h 9 --k 2").code, 2);
  EXPECT_EQ(run("generate --family spiro --q 6 --k 2").code, 2);
  const auto bad = file("bad.txt", "p 2\n0 5\n");
  const CliResult r = run("compute --input " + bad.string());
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(run("compute --input " + (dir_ / "missing.txt").string()).code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, GenerateIsDeterministic) {
  const CliResult a = run("generate --family spiro --q 6 --h 2 --k 8");
  const CliResult b = run("generate --family spiro --q 6 --h 2 --k 8");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("p 41\n", 0), 0u);
  const fs::path out = dir_ / "s.txt";
  ASSERT_EQ(run("generate --family spiro --q 6 --h 2 --k 8 --output " + out.string()).code, 0);
  EXPECT_EQ(slurp(out), a.out);
}

TEST_F(Cli, VerifyCsvForTriangularChains) {
  const CliResult r = run("verify --family chain_triangular --index abc_gg --n 2..8 --format csv");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "kind,family,params,index,closed_form,direct,abs_diff,status,detail");
  int rows = 0, matches = 0;
  while (std::getline(in, line)) {
    ++rows;
    matches += line.find(",MATCH,") != std::string::npos;
  }
  EXPECT_EQ(rows, 7);
  EXPECT_EQ(matches, 7);
}

TEST_F(Cli, VerifyJsonDefaultsToEveryIndexWithATheorem) {
  const CliResult r = run("verify --family q_mn --m 2..3 --n 2");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["entries"].size(), 4u);
  EXPECT_EQ(j["census"].size(), 2u);
  // Four index rows plus two census rows.
  EXPECT_EQ(j["summary"]["MATCH"], 6);
}

TEST_F(Cli, BoundsOnGivenGraph) {
  const auto c4 = file("c4.txt", "p 4\n0 1\n1 2\n2 3\n0 3\n");
  const CliResult r = run("bounds edge_deletion --input " + c4.string() + ":0:1");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["strict"], false);
  EXPECT_EQ(run("bounds edge_deletion --input " + c4.string()).code, 2);
  EXPECT_EQ(run("bounds chain_gg --index abc --input " + c4.string()).code, 2);
}

TEST_F(Cli, BoundsSuiteStreamsAndSummarises) {
  const CliResult r = run("bounds bouquet_gg --seed 5");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line, last;
  int reports = 0;
  while (std::getline(in, line)) {
    if (!last.empty()) ++reports;
    last = line;
  }
  EXPECT_EQ(reports, 1000);
  const auto summary = nlohmann::json::parse(last)["summary"];
  EXPECT_EQ(summary["violations"], 0);
  EXPECT_EQ(summary["applicable"], 1000);
  EXPECT_EQ(run("bounds bouquet_gg --seed 5").out, r.out);
}
