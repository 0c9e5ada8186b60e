#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = {}, bool merge_stderr = false) {
  const std::string cmd = env + " '" CONVLAB_CLI_PATH "' " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string kData = CONVLAB_TEST_DATA;

}  // namespace

TEST(Cli, DiagramFormats) {
  const CliRun dot = run("diagram --atoms 3 --format dot");
  EXPECT_EQ(dot.status, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);

  const CliRun json = run("diagram --atoms 4 --format json");
  ASSERT_EQ(json.status, 0);
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["collapse"]["convergences"], 3);
  EXPECT_EQ(doc["collapse"]["topologies"], 3);

  EXPECT_EQ(run("diagram --atoms 2").status, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("diagram --atoms 0").status, 2);
  EXPECT_EQ(run("diagram --atoms 5").status, 2);
  EXPECT_EQ(run("diagram --atoms 2 --format svg").status, 2);
  EXPECT_EQ(run("verify --atoms 6").status, 2);
  EXPECT_EQ(run("verify --atoms 2 --samples 0").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("converge --atoms 2 --seq '[;{0}]' --law xx").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, ConvergeExamples) {
  const CliRun a = run("converge --atoms 2 --seq '[;{0},{1}]' --law ls");
  EXPECT_EQ(a.status, 0);
  EXPECT_NE(a.out.find("limits   {{0,1}}\n"), std::string::npos);
  EXPECT_NE(a.out.find("masks    3\n"), std::string::npos);

  const CliRun b = run("converge --seq '[;{0}]' --law s");
  EXPECT_EQ(b.status, 0);
  EXPECT_NE(b.out.find("limits   {{0}}\n"), std::string::npos);

  const CliRun c = run("converge --atoms 2 --seq '[{0,1};{0}]' --law li");
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("limits   {{},{0}}\n"), std::string::npos);

  const CliRun d = run("converge --atoms 2 --seq '[{0,1};{0}]' --law li --topology");
  EXPECT_EQ(d.status, 0);
  EXPECT_NE(d.out.find("limits   {{},{0}}\n"), std::string::npos);

  const CliRun e = run("converge --atoms 5 --seq '[;{4},{0,3}]' --law ls");
  EXPECT_EQ(e.status, 0);
  EXPECT_NE(e.out.find("masks    25 27 29 31\n"), std::string::npos);
}

TEST(Cli, ParseErrorReportsPosition) {
  const CliRun r = run("converge --atoms 2 --seq '[{0};{1}' --law s", {}, true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("position 8"), std::string::npos) << r.out;
  EXPECT_EQ(run("converge --atoms 2 --seq '[{7};{1}]'").status, 2);
}

TEST(Cli, VerifyRunsAndIsDeterministic) {
  const CliRun a = run("verify --atoms 3 --seed 5 --samples 200");
  const CliRun b = run("verify --atoms 3 --seed 5 --samples 200");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("12/12 criteria passed"), std::string::npos);
  EXPECT_EQ(run("verify --atoms 1").status, 0);
  EXPECT_EQ(run("diagram --atoms 3 --format json").out, run("diagram --atoms 3 --format json").out);
}

TEST(Cli, VerifyFailsOnBadSubmeasure) {
  const CliRun r = run("verify --atoms 2 --samples 20 --submeasure " + kData + "/nonmonotone2.txt");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("[FAIL] 11."), std::string::npos);
}

TEST(Cli, AtomCapFromEnvironment) {
  EXPECT_EQ(run("verify --atoms 3", "CONVLAB_MAX_ATOMS=2").status, 2);
  EXPECT_EQ(run("diagram --atoms 2", "CONVLAB_MAX_ATOMS=2").status, 0);
  EXPECT_EQ(run("converge --atoms 5 --seq '[;{0}]'", "CONVLAB_MAX_ATOMS=9").status, 0);
  EXPECT_EQ(run("converge --atoms 6 --seq '[;{0}]'", "CONVLAB_MAX_ATOMS=9").status, 2);
  EXPECT_EQ(run("diagram --atoms 1", "CONVLAB_MAX_ATOMS=abc").status, 2);
}

TEST(Cli, SubmeasureCommand) {
  const CliRun ok = run("submeasure --atoms 2 --submeasure " + kData + "/counting2.txt");
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("triangle           yes"), std::string::npos);
  EXPECT_NE(ok.out.find("16 opens, discrete"), std::string::npos);

  EXPECT_EQ(run("submeasure --atoms 2 --submeasure " + kData + "/nonmonotone2.txt").status, 1);
  EXPECT_EQ(run("submeasure --atoms 3 --submeasure " + kData + "/counting2.txt").status, 2);
  EXPECT_EQ(run("submeasure --atoms 3 --submeasure truncated").status, 0);
}
