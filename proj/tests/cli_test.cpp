#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fourcolor/graph_io.hpp"
#include "fourcolor/named_graphs.hpp"

using namespace fourcolor;

namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string("'") + FOURCOLOR_CLI + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string g6(const Graph& g) { return "'" + emit_graph6(g) + "'"; }

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("fourcolor_cli_test_" + name);
  std::ofstream(p) << body;
  return p;
}

// FOURCOLOR_UPDATE_GOLDEN=1 rewrites the files instead of comparing.
void expect_golden(const std::string& name, const std::string& args, int status = 0) {
  CliResult r = run(args);
  EXPECT_EQ(r.status, status) << args;
  const std::filesystem::path path = std::filesystem::path(FOURCOLOR_GOLDEN_DIR) / (name + ".txt");
  if (std::getenv("FOURCOLOR_UPDATE_GOLDEN")) {
    std::ofstream(path) << r.out;
    return;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << "missing golden " << path;
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(r.out, want.str()) << name;
}

}  // namespace

TEST(Cli, ColorWheel) {
  CliResult r = run("color --in " + g6(named::wheel(5)));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("k=4\n", 0), 0u) << r.out;
}

TEST(Cli, DetectTwoP2InP5) {
  CliResult r = run("detect --pattern 2P2 --in " + g6(named::path(5)));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0 1 3 4\n");
}

TEST(Cli, OracleOnC7Complement) {
  CliResult r = run("oracle --in " + g6(named::c7_complement()));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("chi=4"), std::string::npos);
}

TEST(Cli, ReadsGraphFiles) {
  auto g6file = temp_file("w5.g6", emit_graph6(named::wheel(5)) + "\n");
  EXPECT_EQ(run("color --in '" + g6file.string() + "'").status, 0);
  auto edges = temp_file("c5.txt", emit_edge_list(named::cycle(5)));
  CliResult r = run("oracle --porcelain --in '" + edges.string() + "'");
  EXPECT_EQ(r.out, "chi=3 omega=2\n");
}

TEST(Cli, VerifyAssignments) {
  auto good = temp_file("good.txt", "0 1\n1 2\n2 1\n3 2\n4 3\n");
  auto bad = temp_file("bad.txt", "0 1\n1 1\n2 2\n3 1\n4 2\n");
  auto broken = temp_file("broken.txt", "0 1\n");
  const std::string c5 = g6(named::cycle(5));
  expect_golden("verify_good", "verify --porcelain --in " + c5 + " --assignment '" + good.string() + "'");
  expect_golden("verify_bad", "verify --porcelain --in " + c5 + " --assignment '" + bad.string() + "'", 1);
  EXPECT_EQ(run("verify --in " + c5 + " --assignment '" + broken.string() + "'").status, 1);
}

TEST(Cli, ClassFailurePrintsWitness) {
  expect_golden("color_p5", "color --porcelain --in " + g6(named::path(5)), 1);
  EXPECT_EQ(run("approx --in " + g6(named::cycle(4))).status, 1);
  EXPECT_EQ(run("partition --in " + g6(named::complete(4))).status, 1);
  EXPECT_EQ(run("partition --anchor h1 --in " + g6(named::cycle(5))).status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("paint --in " + g6(named::cycle(5))).status, 2);
  EXPECT_EQ(run("generate --n 5").status, 2);
  EXPECT_EQ(run("detect --in " + g6(named::cycle(5))).status, 2);
  EXPECT_EQ(run("detect --pattern P9 --in " + g6(named::cycle(5))).status, 2);
  EXPECT_EQ(run("color").status, 2);
  EXPECT_EQ(run("partition --anchor h7 --in " + g6(named::cycle(5))).status, 2);
  EXPECT_EQ(run("generate --seed 1 --class 3P1").status, 2);
  EXPECT_EQ(run("suite --only 11").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, InvalidInput) {
  EXPECT_EQ(run("oracle --in 'D?'").status, 1);
  EXPECT_EQ(run("oracle --in " + g6(Graph(30))).status, 1);
}

TEST(Cli, PorcelainGoldens) {
  expect_golden("color_w5", "color --porcelain --trace --in " + g6(named::wheel(5)));
  expect_golden("color_h1", "color --porcelain --trace --in " + g6(named::h1()));
  expect_golden("detect_p5", "detect --porcelain --pattern 2P2 --in " + g6(named::path(5)));
  expect_golden("detect_none", "detect --porcelain --pattern K4 --in " + g6(named::cycle(5)));
  expect_golden("oracle_c7bar", "oracle --porcelain --in " + g6(named::c7_complement()));
  expect_golden("approx_c5", "approx --porcelain --in " + g6(named::cycle(5)));
  expect_golden("partition_h2", "partition --porcelain --anchor c5 --in " + g6(named::h2()));
  expect_golden("partition_h1", "partition --porcelain --anchor h1 --in " + g6(named::h1()));
  expect_golden("generate", "generate --porcelain --seed 7 --n 8 --count 3");
  expect_golden("generate_manifest", "generate --seed 11 --n 12 --class 4P1C4 --method incremental --count 2");
  expect_golden("generate_blowup", "generate --porcelain --seed 0 --construction 'C5-blowup(1,2,1,2,1)'");
  expect_golden("suite_extremal", "suite --porcelain --only 1");
}
