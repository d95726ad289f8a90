#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string command = std::string(OPNLAB_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, TableMatchesGolden) {
  const CliRun r = run("table --m-min 9 --m-max 20 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, slurp(OPNLAB_GOLDEN_TABLE));
}

TEST(Cli, TableIsDeterministic) {
  const CliRun a = run("table --m-min 9 --m-max 14 --format jsonl");
  const CliRun b = run("table --m-min 9 --m-max 14 --format jsonl");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  const auto row = nlohmann::json::parse(line);
  EXPECT_EQ(row["m"], 9);
  EXPECT_EQ(row["p_I2"], 31);
  EXPECT_EQ(row["p_I3"], 509);
}

TEST(Cli, TableDefaultsAndErrors) {
  EXPECT_EQ(run("table --format csv").out, slurp(OPNLAB_GOLDEN_TABLE));
  EXPECT_EQ(run("table --m-min 20 --m-max 9").status, 2);
  EXPECT_EQ(run("table --m-min 5").status, 2);
  EXPECT_EQ(run("table --format xml").status, 2);
}

TEST(Cli, Sigma) {
  const CliRun r = run("sigma 945 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("945,3^3*5*7,1920,128/63,"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Abundant"), std::string::npos);
  EXPECT_EQ(run("sigma 2^4*31").status, 0);
  EXPECT_EQ(run("sigma nope").status, 2);
}

TEST(Cli, ScreenExitCodes) {
  const CliRun r = run("screen '3^2*7^2*11^2*13' --format csv");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("perfect,Violates,NotPerfect,722/363"), std::string::npos) << r.out;
  EXPECT_EQ(run("screen '9^2'").status, 2);
}

TEST(Cli, Radical) {
  const CliRun r = run("radical --mode alpha2 3 5 7 --format jsonl");
  EXPECT_EQ(r.status, 1);
  const auto v = nlohmann::json::parse(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(v["condition"], "TripleExclusion357");
  EXPECT_EQ(v["witness"], "7657/3675");

  EXPECT_EQ(run("radical 3 5 83 89 107 127 137 151 173").status, 0);
  EXPECT_EQ(run("radical --mode alpha1 3 5 7").status, 0);
  EXPECT_EQ(run("radical --mode bogus 3 5 7").status, 2);
  EXPECT_EQ(run("radical 3 9").status, 2);
}

TEST(Cli, Constants) {
  const CliRun r = run("constants --alpha 2 --width 1e-10 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("1.90150256589"), std::string::npos) << r.out;
  EXPECT_EQ(run("constants --width 0").status, 2);
  EXPECT_EQ(run("constants --alpha 0").status, 2);
}

TEST(Cli, NoSubcommand) { EXPECT_EQ(run("").status, 2); }

}  // namespace
