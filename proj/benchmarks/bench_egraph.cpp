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

#include "flexc/EGraph.h"
#include "flexc/EqSat.h"
#include "flexc/Extract.h"
#include "flexc/Rulesets.h"
#include "flexc/Saturation.h"

#include <benchmark/benchmark.h>

#include <string>

using namespace flexc;

static Dfg chainOf(const char *Op, int Length) {
  std::string Text = "a input a\nb input b\nx0 " + std::string(Op) + " a b\n";
  for (int I = 1; I < Length; ++I)
    Text += "x" + std::to_string(I) + " " + Op + " x" +
            std::to_string(I - 1) + (I % 2 ? " a\n" : " b\n");
  Text += "out x" + std::to_string(Length - 1) + "\n";
  return parseDfg(Text);
}

static void BM_SaturateSubChain(benchmark::State &State) {
  Dfg D = chainOf("sub", static_cast<int>(State.range(0)));
  auto Rules = builtinRuleset(RuleSet::Int);
  for (auto _ : State) {
    EGraph G = egraphInit(D);
    SaturationReport R = runSaturation(G, Rules, {6, 200'000, 60.0});
    benchmark::DoNotOptimize(R.FinalNodeCount);
  }
}
BENCHMARK(BM_SaturateSubChain)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_EqsatRewrite(benchmark::State &State) {
  Dfg D = chainOf("sub", static_cast<int>(State.range(0)));
  auto Rules = builtinRuleset(RuleSet::Int);
  OpSet Ops = OpSet::parse("add,xor");
  for (auto _ : State) {
    EqsatResult R = eqsatRewrite(D, Rules, Ops);
    benchmark::DoNotOptimize(R.Cost);
  }
}
BENCHMARK(BM_EqsatRewrite)->Arg(2)->Arg(4)->Arg(8);

static void BM_ExtractSaturated(benchmark::State &State) {
  Dfg D = chainOf("sub", static_cast<int>(State.range(0)));
  EGraph G = egraphInit(D);
  runSaturation(G, builtinRuleset(RuleSet::Int), {6, 200'000, 60.0});
  OpSet Ops = OpSet::parse("add,xor");
  for (auto _ : State) {
    ExtractResult X = extractBest(G, Ops);
    benchmark::DoNotOptimize(X.DagCost);
  }
}
BENCHMARK(BM_ExtractSaturated)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
