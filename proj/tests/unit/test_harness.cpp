#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "harness/suites.hpp"
#include "loccol/error.hpp"

using namespace loccol;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LOCCOL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_path(const std::string& name) {
  return ::testing::TempDir() + "loccol_" + name;
}

}  // namespace

TEST(Harness, SuiteIds) {
  EXPECT_EQ(harness::suite_ids().size(), 11u);
  try {
    harness::run_suite("nope");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSuite);
  }
}

TEST(Harness, QuickSuitesPass) {
  for (const char* id : {"compl", "hh", "myc-chain"}) {
    const auto s = harness::run_suite(id);
    EXPECT_TRUE(s.passed()) << id;
    EXPECT_FALSE(s.checks.empty());
  }
}

TEST(Harness, SwideThresholdForFour) {
  const auto th = harness::swide_threshold(4, 4, 1000, {});
  ASSERT_TRUE(th.threshold);
  EXPECT_EQ(th.rows.front().s, 2);
  for (const auto& row : th.rows) {
    if (row.value) EXPECT_LE(*row.value, 2);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("verify compl"), 0);
  EXPECT_EQ(run_cli("verify no-such-suite"), 2);
  EXPECT_EQ(run_cli("no-such-command"), 2);
  EXPECT_EQ(run_cli("gen shift 0"), 2);

  const std::string graph = temp_path("k3.json");
  const std::string coloring = temp_path("k3c.json");
  ASSERT_EQ(run_cli("--out " + graph + " gen complete 3"), 0);
  {
    std::ofstream(coloring) << R"({"colors":[0,1,2]})";
  }
  EXPECT_EQ(run_cli("solve wide " + graph + " --coloring " + coloring + " --s 1"), 0);
  EXPECT_EQ(run_cli("solve wide " + graph + " --coloring " + coloring + " --s 2"), 1);
  std::remove(graph.c_str());
  std::remove(coloring.c_str());
}
