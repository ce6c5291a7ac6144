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

//===- BenchTest.cpp ------------------------------------------------------===//

#include "TestUtil.h"

#include "flexc/Bench.h"
#include "flexc/Error.h"
#include "flexc/Rulesets.h"

#include <fstream>
#include <unistd.h>
#include <gtest/gtest.h>

using namespace flexc;
using namespace flexc::test;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
  TempDir() {
    static int Counter = 0;
    Path = fs::temp_directory_path() /
           ("flexc_bench_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(Counter++));
    fs::create_directories(Path);
  }
  ~TempDir() { fs::remove_all(Path); }
  void write(const std::string &Name, const std::string &Text) const {
    std::ofstream(Path / Name) << Text;
  }
  fs::path Path;
};

KernelResult row(Outcome O, Strategy S = Strategy::Hybrid,
                 std::string Arch = "x") {
  KernelResult K;
  K.Kernel = "k";
  K.Arch = std::move(Arch);
  K.Strat = S;
  K.Result = O;
  return K;
}

} // namespace

TEST(Bench, ListKernelsErrors) {
  TempDir T;
  EXPECT_THROW(listKernels(T.Path), Error);
  EXPECT_THROW(listKernels(T.Path / "missing"), Error);
  T.write("b.dfg", "a input a\nout a\n");
  T.write("a.dfg", "a input a\nout a\n");
  T.write("notes.txt", "");
  auto Ks = listKernels(T.Path);
  ASSERT_EQ(Ks.size(), 2u);
  EXPECT_EQ(Ks[0].filename(), "a.dfg");
}

TEST(Bench, DivOnlyKernelFailsRewrite) {
  TempDir T;
  T.write("div_only.dfg", "a input a\nb input b\nq div a b\nout q\n");
  T.write("broken.dfg", "a frob\n");
  BenchOptions O;
  auto Rs = runCorpus(T.Path, {builtinArch("cca")}, {Strategy::Hybrid}, O);
  ASSERT_EQ(Rs.size(), 2u);
  EXPECT_EQ(Rs[0].Kernel, "broken.dfg");
  EXPECT_EQ(Rs[0].Result, Outcome::ParseFailure);
  EXPECT_EQ(Rs[1].Result, Outcome::FailedRewrite);
  EXPECT_GE(Rs[1].CostAfter, UnsupportedPenalty);
}

TEST(Bench, OutcomesConsistentWithCosts) {
  BenchOptions O;
  O.Map = true;
  CgraSpec S = builtinArch("cca");
  auto Rules = selectRulesets(defaultRulesets(S));
  for (Strategy St : {Strategy::None, Strategy::Greedy, Strategy::Hybrid}) {
    KernelResult K = runKernel("sub", serializeDfg(subKernel()), S, St,
                               Rules, O);
    bool Rewritten = K.Result == Outcome::RewrittenGreedy ||
                     K.Result == Outcome::RewrittenEqsat ||
                     K.Result == Outcome::SupportedNatively;
    EXPECT_EQ(K.Result == Outcome::FailedRewrite,
              K.CostAfter >= UnsupportedPenalty);
    EXPECT_EQ(Rewritten, K.Ii.has_value());
  }
  KernelResult H = runKernel("sub", serializeDfg(subKernel()), S,
                             Strategy::Hybrid, Rules, O);
  EXPECT_EQ(H.Result, Outcome::RewrittenEqsat);
  EXPECT_FALSE(H.RulesApplied.empty());
}

TEST(Bench, CorpusHybridAtLeastNone) {
  BenchOptions O;
  auto Rs = runCorpus(sourcePath("corpus"), {builtinArch("cca")},
                      {Strategy::None, Strategy::Hybrid}, O);
  BenchReport R = summarize(Rs);
  ASSERT_EQ(R.Rates.size(), 2u);
  EXPECT_EQ(R.Rates[0].Kernels, 20u);
  size_t None = 0, Hybrid = 0;
  for (const RateRow &Row : R.Rates)
    (Row.Strat == Strategy::None ? None : Hybrid) = Row.Compiled;
  EXPECT_GE(Hybrid, None);
}

TEST(Bench, ParallelMatchesSerial) {
  BenchOptions Serial, Parallel;
  Parallel.Threads = 4;
  std::vector<CgraSpec> Archs{builtinArch("cca"), builtinArch("maeri")};
  std::vector<Strategy> Ss{Strategy::Greedy, Strategy::Hybrid};
  auto A = runCorpus(sourcePath("corpus"), Archs, Ss, Serial);
  auto B = runCorpus(sourcePath("corpus"), Archs, Ss, Parallel);
  ASSERT_EQ(A.size(), B.size());
  EXPECT_EQ(summaryCsv(summarize(A)).substr(0, 40),
            summaryCsv(summarize(B)).substr(0, 40));
  for (size_t I = 0; I < A.size(); ++I) {
    EXPECT_EQ(A[I].Kernel, B[I].Kernel);
    EXPECT_EQ(A[I].Result, B[I].Result);
    EXPECT_EQ(A[I].CostAfter, B[I].CostAfter);
    EXPECT_EQ(A[I].RulesApplied, B[I].RulesApplied);
  }
}

TEST(Summarize, Rates) {
  std::vector<KernelResult> All(5, row(Outcome::SupportedNatively));
  EXPECT_EQ(summarize(All).Rates[0].Rate, 1.0);

  std::vector<KernelResult> Mixed;
  for (int I = 0; I < 20; ++I)
    Mixed.push_back(
        row(I < 11 ? Outcome::RewrittenEqsat : Outcome::FailedRewrite));
  BenchReport R = summarize(Mixed);
  ASSERT_EQ(R.Rates.size(), 1u);
  EXPECT_DOUBLE_EQ(R.Rates[0].Rate, 0.55);
  EXPECT_EQ(R.Rates[0].Compiled, 11u);
}

TEST(Summarize, Ratios) {
  std::vector<KernelResult> Rs;
  for (int I = 0; I < 4; ++I)
    Rs.push_back(row(I < 3 ? Outcome::RewrittenEqsat : Outcome::FailedRewrite,
                     Strategy::Hybrid));
  for (int I = 0; I < 4; ++I)
    Rs.push_back(row(I < 2 ? Outcome::SupportedNatively
                           : Outcome::FailedRewrite,
                     Strategy::None));
  BenchReport R = summarize(Rs);
  bool Found = false;
  for (const RatioRow &Row : R.Ratios)
    if (Row.Arch == "all" && Row.Numerator == Strategy::Hybrid &&
        Row.Denominator == Strategy::None) {
      Found = true;
      ASSERT_TRUE(Row.Ratio.has_value());
      EXPECT_DOUBLE_EQ(*Row.Ratio, 1.5);
    }
  EXPECT_TRUE(Found);
}

TEST(Emit, FilesAndHeaders) {
  TempDir T;
  std::vector<KernelResult> Rs{row(Outcome::SupportedNatively),
                               row(Outcome::FailedRewrite, Strategy::None)};
  Rs[0].WallSeconds = 0.01;
  Rs[0].RulesApplied["r"] = 2;
  BenchReport R = summarize(Rs);
  emitReport(R, Rs, T.Path / "out");
  for (const char *F : {"summary.csv", "kernels.csv", "ratios.csv",
                        "rates.csv", "time_cdf.csv", "time_histogram.csv",
                        "rules.md"})
    EXPECT_TRUE(fs::exists(T.Path / "out" / F)) << F;
  EXPECT_EQ(summaryCsv(R).substr(0, summaryCsv(R).find('\n')),
            "arch,strategy,kernels,compiled,rate,supported_natively,"
            "rewritten_greedy,rewritten_eqsat,failed_rewrite,failed_mapping,"
            "timeout,parse_failure,total_seconds");
  EXPECT_NE(rulesMarkdown(R).find("| x | `r` | 2 |"), std::string::npos)
      << rulesMarkdown(R);
  EXPECT_NE(timeCdfCsv(R).find("hybrid,0.01"), std::string::npos);
}
