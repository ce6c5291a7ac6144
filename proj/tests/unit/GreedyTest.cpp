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

//===- GreedyTest.cpp -----------------------------------------------------===//

#include "TestUtil.h"

#include "flexc/Greedy.h"
#include "flexc/ProgramSpace.h"
#include "flexc/Rulesets.h"

#include <gtest/gtest.h>

using namespace flexc;
using namespace flexc::test;

TEST(Greedy, MultiplyByMinusOneBecomesNegate) {
  Dfg D = parseDfg("a input a\nm const -1\np mul a m\nout p");
  OpSet Ops{OpKind::Neg};
  EXPECT_GE(cost(D, Ops), UnsupportedPenalty);
  GreedyResult R = greedyRewrite(D, builtinRuleset(RuleSet::Int), Ops);
  EXPECT_EQ(R.Cost, 1u);
  ASSERT_EQ(R.Trace.size(), 1u);
  EXPECT_EQ(R.Trace[0], "?x * -1 => -?x");
}

TEST(Greedy, SupportedInputUnchanged) {
  Dfg D = parseDfg("a input a\nb input b\ns add a b\nout s");
  GreedyResult R =
      greedyRewrite(D, builtinRuleset(RuleSet::Int), {OpKind::Add});
  EXPECT_TRUE(R.Trace.empty());
  EXPECT_EQ(R.Result, D);
}

TEST(Greedy, CostTrap) {
  GreedyResult R = greedyRewrite(subKernel(), builtinRuleset(RuleSet::Int),
                                 OpSet::parse("add,xor,const"));
  EXPECT_GE(R.Cost, UnsupportedPenalty);
  EXPECT_TRUE(R.Trace.empty());
}

TEST(Greedy, CyclicRulePairTerminates) {
  auto Rules = parseRuleFile("?x + ?y => ?y + ?x\n?x * 2 <=> ?x << 1\n");
  Dfg D = parseDfg("a input a\nb input b\nt const 2\nm mul a t\n"
                   "s add m b\nout s");
  GreedyResult R = greedyRewrite(D, Rules, OpSet::parse("add"));
  EXPECT_TRUE(R.Trace.empty());
}

TEST(GreedyProperty, StrictlyDecreasingAndSound) {
  ProgramSpace S;
  S.Grammar = OpSet::parse("add,sub,mul,neg,xor,not,and,or");
  S.MaxOps = 5;
  S.NumInputs = 2;
  S.Constants = {-1, 2};
  auto Rules = builtinRuleset(RuleSet::Int);
  OpSet Ops = OpSet::parse("add,xor,neg,or,not,shl");
  std::mt19937_64 Rng(5);
  for (const Dfg &D : samplePrograms(S, 1, 150, 8)) {
    GreedyResult R = greedyRewrite(D, Rules, Ops);
    ASSERT_EQ(R.Trace.size(), R.CostTrace.size());
    uint64_t Prev = cost(D, Ops);
    for (uint64_t C : R.CostTrace) {
      EXPECT_LT(C, Prev);
      Prev = C;
    }
    EXPECT_EQ(R.Cost, cost(R.Result, Ops));
    EXPECT_LE(R.Cost, cost(D, Ops));
    EXPECT_EQ(greedyRewrite(D, Rules, Ops).Trace, R.Trace);
    for (int I = 0; I < 20; ++I) {
      Env E = randomEnv(D, Rng);
      EXPECT_EQ(interpret(D, E).Outputs, interpret(R.Result, E).Outputs);
    }
  }
}
