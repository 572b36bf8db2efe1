// Runs the cm2 executable end to end and checks output and exit codes.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const std::string cli = CM2_CLI_PATH;

auto shell(const std::string &cmd_line) -> Run {
  const std::string cmd = cmd_line + " 2>/dev/null";
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe))
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

auto run(const std::string &args) -> Run { return shell(cli + " " + args); }

auto temp_file(const std::string &name, const std::string &content) -> std::string {
  const auto path = std::filesystem::temp_directory_path() / ("cm2_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

auto contains(const std::string &hay, const std::string &needle) -> bool {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST(Cli, IndexGraph6FromStdin) {
  const auto r = shell("printf 'CF' | " + cli + " index --which both -"); // K_{1,3} centred at 3
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cm2 24\nm2 9\n");
  const auto k4 = shell("printf 'C~\\n' | " + cli + " index --format graph6");
  EXPECT_EQ(k4.out, "cm2 0\n");
}

TEST(Cli, IndexEdgeList) {
  const auto file = temp_file("p4.txt", "4\n0 1\n1 2\n2 3\n");
  const auto r = run("index " + file + " --format edgelist");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cm2 6\n");
  const auto one = temp_file("p4one.txt", "4\n1 2\n2 3\n3 4\n");
  EXPECT_EQ(run("index " + one + " --one-based").out, "cm2 6\n");
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("index " + temp_file("loop.txt", "2\n0 0\n")).code, 2);
  EXPECT_EQ(run("index /nonexistent/file").code, 2);
  EXPECT_EQ(run("index " + temp_file("bad.g6", "C\n")).code, 2);
  EXPECT_EQ(run("verify --n 9").code, 2);
  EXPECT_EQ(run("verify --n 8").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}

TEST(Cli, Extremal) {
  const auto r = run("extremal --n 10");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "4,1560"));
  EXPECT_TRUE(contains(r.out, "argmax m=4 value=1560 ties=4"));
}

TEST(Cli, VerifyWritesReport) {
  const auto path = (std::filesystem::temp_directory_path() / "cm2_cli_test_report.json").string();
  const auto r = run("verify --n 5 --jobs 2 --out " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "VERIFIED"));
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["global_max"], 72);
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, VerifyCsvAndFailureExit) {
  const auto ok = run("verify --n 4 --csv");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "n,global_max,closed_form_max,m_star,maximizer_count,verified\n4,24,24,1,4,true\n");
  const auto two = run("verify --n 2");
  EXPECT_EQ(two.code, 1);
  EXPECT_TRUE(contains(two.out, "counterexample=A?"));
}

TEST(Cli, JobsFromEnvironment) {
  const auto plain = run("verify --n 5 --csv");
  const auto env = shell("CM2_JOBS=3 " + cli + " verify --n 5 --csv");
  EXPECT_EQ(env.code, 0);
  EXPECT_EQ(plain.out, env.out);
  EXPECT_EQ(shell("CM2_JOBS=zero " + cli + " verify --n 4 --csv").code, 0);
}

TEST(Cli, ClimbWritesTrace) {
  const auto trace = (std::filesystem::temp_directory_path() / "cm2_cli_test_trace.txt").string();
  const auto input = temp_file("bex.txt", "6\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n4 5\n");
  const auto r = run("climb " + input + " --policy best --trace " + trace + " --starts 5 --seed 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "initial_cm2 70"));
  EXPECT_TRUE(contains(r.out, "random_starts 5"));
  std::ifstream in(trace);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first.size(), 4U); // graph6 of a 6-vertex graph
  std::string step;
  std::getline(in, step);
  EXPECT_TRUE(step.starts_with("B ") || step.starts_with("C ") || step.starts_with("A "));
}

TEST(Cli, ClaimsTable) {
  const auto r = run("claims " + temp_file("p4claims.g6", "Ch"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "claim6\tFAIL"));
  EXPECT_TRUE(contains(r.out, "claim4\tpass"));
}

TEST(Cli, Orient) {
  const auto r = run("orient " + temp_file("p3.txt", "3\n0 1\n1 2\n"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "arcs 1->0 1->2"));
  EXPECT_TRUE(contains(r.out, "X 1\nY 0 2\n"));
  EXPECT_TRUE(contains(r.out, "1,2,0,2,X"));
}
