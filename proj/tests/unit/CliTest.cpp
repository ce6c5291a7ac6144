// Copyright 2026 The FlexC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//===- CliTest.cpp - Command line behaviour -------------------------------===//

#include "TestUtil.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int Code = -1;
  std::string Out;
};

RunResult run(const std::string &Args) {
  std::string Cmd = std::string(FLEXC_CLI_PATH) + " " + Args + " 2>&1";
  RunResult R;
  FILE *P = ::popen(Cmd.c_str(), "r");
  if (!P)
    return R;
  std::array<char, 4096> Buf;
  size_t N;
  while ((N = std::fread(Buf.data(), 1, Buf.size(), P)) > 0)
    R.Out.append(Buf.data(), N);
  int Status = ::pclose(P);
  R.Code = WIFEXITED(Status) ? WEXITSTATUS(Status) : -1;
  return R;
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    Dir = fs::temp_directory_path() /
          ("flexc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(Dir);
    std::ofstream(Dir / "sub.dfg") << "a input a\nb input b\nd sub a b\n"
                                      "out d\n";
    std::ofstream(Dir / "div.dfg") << "a input a\nb input b\nq div a b\n"
                                      "out q\n";
    std::ofstream(Dir / "bad.dfg") << "a frob\n";
  }
  void TearDown() override { fs::remove_all(Dir); }
  std::string path(const char *F) { return (Dir / F).string(); }
  fs::path Dir;
};

} // namespace

TEST_F(Cli, RewriteEscapesCostTrap) {
  RunResult R = run("rewrite --dfg " + path("sub.dfg") +
                    " --ops add,xor,const,cmp --rulesets int");
  EXPECT_EQ(R.Code, 0) << R.Out;
  EXPECT_NE(R.Out.find("xor"), std::string::npos) << R.Out;
  EXPECT_EQ(R.Out.find("sub"), std::string::npos) << R.Out;
}

TEST_F(Cli, GreedyStrictFails) {
  RunResult R = run("rewrite --strict --strategy greedy --dfg " +
                    path("sub.dfg") + " --ops add,xor,const --rulesets int");
  EXPECT_EQ(R.Code, 1) << R.Out;
}

TEST_F(Cli, CompileMapsOnBuiltin) {
  RunResult R = run("compile --dfg " + path("sub.dfg") +
                    " --arch-builtin cca --mapping-out " +
                    path("map.txt"));
  EXPECT_EQ(R.Code, 0) << R.Out;
  std::ifstream In(path("map.txt"));
  std::string First;
  std::getline(In, First);
  EXPECT_EQ(First.rfind("ii ", 0), 0u) << First;
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").Code, 2);
  EXPECT_EQ(run("rewrite").Code, 2);
  EXPECT_EQ(run("rewrite --dfg " + path("bad.dfg") + " --ops add").Code, 2);
  EXPECT_EQ(
      run("rewrite --dfg " + path("sub.dfg") + " --arch-builtin nope").Code,
      2);
  EXPECT_EQ(run("rewrite --dfg " + path("sub.dfg") + " --ops add --strategy "
                "magic")
                .Code,
            2);
  EXPECT_EQ(run("frobnicate").Code, 2);
}

TEST_F(Cli, MissingInputsAreUsageErrors) {
  EXPECT_EQ(run("rewrite --dfg " + path("missing.dfg") + " --ops add").Code,
            2);
  EXPECT_EQ(run("bench --corpus " + path("nothing")).Code, 2);
}

TEST_F(Cli, ExplainPrintsTrace) {
  RunResult R = run("explain --dfg " + path("sub.dfg") + " --arch-builtin cca");
  EXPECT_EQ(R.Code, 0) << R.Out;
  EXPECT_NE(R.Out.find("saturat"), std::string::npos) << R.Out;
}

TEST_F(Cli, BenchWritesReports) {
  fs::create_directories(Dir / "corpus");
  fs::copy_file(Dir / "sub.dfg", Dir / "corpus" / "sub.dfg");
  fs::copy_file(Dir / "div.dfg", Dir / "corpus" / "div.dfg");
  RunResult R = run("bench --corpus " + (Dir / "corpus").string() +
                    " --arch-builtin cca --out " + path("report"));
  EXPECT_EQ(R.Code, 0) << R.Out;
  EXPECT_TRUE(fs::exists(Dir / "report" / "summary.csv"));
  EXPECT_TRUE(fs::exists(Dir / "report" / "kernels.csv"));
  RunResult Strict = run("bench --strict --corpus " +
                         (Dir / "corpus").string() +
                         " --arch-builtin cca --out " + path("report2"));
  EXPECT_EQ(Strict.Code, 1);
}

TEST_F(Cli, CeilingPrintsEstimates) {
  RunResult R = run("ceiling --grammar-ops add,sub,neg --max-ops 2 "
                    "--ops add,xor --strategies greedy,hybrid");
  EXPECT_EQ(R.Code, 0) << R.Out;
  EXPECT_NE(R.Out.find("strategy,programs,supp_fraction,ceiling,excluded"),
            std::string::npos)
      << R.Out;
  EXPECT_NE(R.Out.find("hybrid,"), std::string::npos);
}
