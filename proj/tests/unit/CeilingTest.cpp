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

//===- CeilingTest.cpp ----------------------------------------------------===//

#include "TestUtil.h"

#include "flexc/Ceiling.h"
#include "flexc/Error.h"
#include "flexc/ProgramSpace.h"
#include "flexc/Rulesets.h"

#include <gtest/gtest.h>

using namespace flexc;
using namespace flexc::test;

TEST(OptimalRewrite, FindsTwosComplementChain) {
  OptimalRewriteResult R =
      optimalRewrite(subKernel(), builtinRuleset(RuleSet::Int),
                     OpSet::parse("add,xor,const"));
  ASSERT_EQ(R.Status, OptimalStatus::Found);
  EXPECT_FALSE(R.FoundBySaturation);
  EXPECT_LE(R.Depth, 4u);
  EXPECT_EQ(cost(*R.Program, OpSet::parse("add,xor")), 3u);
}

TEST(OptimalRewrite, SupportedInputAtDepthZero) {
  Dfg D = parseDfg("a input a\nb input b\ns add a b\nout s");
  OptimalRewriteResult R =
      optimalRewrite(D, builtinRuleset(RuleSet::Int), {OpKind::Add});
  ASSERT_EQ(R.Status, OptimalStatus::Found);
  EXPECT_EQ(R.Depth, 0u);
  EXPECT_EQ(*R.Program, D);
}

TEST(OptimalRewrite, DivisionProvenUnreachable) {
  Dfg D = parseDfg("a input a\nb input b\nq div a b\nout q");
  OptimalRewriteResult R = optimalRewrite(D, builtinRuleset(RuleSet::Int),
                                          OpSet::parse("add,sub,mul,xor"));
  EXPECT_EQ(R.Status, OptimalStatus::Unreachable);
  EXPECT_FALSE(R.Program.has_value());
}

TEST(OptimalRewrite, BudgetExceededIsDistinct) {
  Dfg D = parseDfg("a input a\nb input b\nq div a b\nout q");
  OptimalRewriteLimits L;
  L.Saturation.IterLimit = 0;
  auto Rules = parseRuleFile("?a + ?b => ?b + ?a\n?a * 2 <=> ?a << 1\n");
  OptimalRewriteResult R =
      optimalRewrite(D, builtinRuleset(RuleSet::Int), {OpKind::Add}, L);
  EXPECT_EQ(R.Status, OptimalStatus::BudgetExceeded);
  Dfg Big = parseDfg("a input a\nb add a a\nc add b b\nd add c c\n"
                     "e add d d\nf add e e\ng add f f\nh add g g\n"
                     "i add h h\nj add i i\nout j");
  EXPECT_THROW(optimalRewrite(Big, Rules, {OpKind::Add}), Error);
}

static std::vector<Dfg> programs(const char *Ops, unsigned MaxOps) {
  ProgramSpace S;
  S.Grammar = OpSet::parse(Ops);
  S.MaxOps = MaxOps;
  return enumeratePrograms(S);
}

TEST(SuppFraction, Extremes) {
  auto Ps = programs("add", 2);
  CgraSpec S = homogeneousArch("g", 2, 2, {OpKind::Add});
  CompilerUnderTest C;
  C.Rewriter = RewriterKind::None;
  C.Mapper = MapperKind::Optimal;
  EXPECT_EQ(suppFraction(Ps, {}, C, S), 1.0);

  auto Muls = programs("mul", 1);
  Muls.erase(std::remove_if(Muls.begin(), Muls.end(),
                            [](const Dfg &D) { return D.numOps() == 0; }),
             Muls.end());
  EXPECT_EQ(suppFraction(Muls, {}, C, S), 0.0);
  EXPECT_THROW(suppFraction({}, {}, C, S), Error);
}

TEST(SuppFraction, SupersetOpsNeverDecrease) {
  auto Ps = programs("add,sub,neg", 2);
  auto Rules = builtinRuleset(RuleSet::Int);
  CompilerUnderTest C;
  C.Rewriter = RewriterKind::Hybrid;
  double Small =
      suppFraction(Ps, Rules, C, homogeneousArch("g", 2, 2, {OpKind::Add}));
  double Big = suppFraction(
      Ps, Rules, C, homogeneousArch("g", 2, 2, OpSet::parse("add,xor")));
  EXPECT_LE(Small, Big);
}

TEST(Ceiling, OptimalAgainstItselfIsOne) {
  auto Ps = programs("add,sub,neg", 2);
  CgraSpec S = homogeneousArch("g", 2, 2, OpSet::parse("add,xor"));
  CompilerUnderTest Opt;
  Opt.Rewriter = RewriterKind::Optimal;
  CeilingReport R =
      ceilingEstimate(Ps, builtinRuleset(RuleSet::Int), Opt, S, Opt);
  EXPECT_EQ(R.Estimate, 1.0);
  EXPECT_TRUE(R.Misses.empty());
}

TEST(Ceiling, EmptyRulesetIsOne) {
  auto Ps = programs("add,sub", 2);
  CgraSpec S = homogeneousArch("g", 2, 2, {OpKind::Add});
  CompilerUnderTest Greedy;
  Greedy.Rewriter = RewriterKind::Greedy;
  CeilingReport R = ceilingEstimate(Ps, {}, Greedy, S);
  EXPECT_EQ(R.Estimate, 1.0);
  EXPECT_EQ(R.OptimalSuccesses, R.HeuristicSuccesses);
}

TEST(Ceiling, GreedyMissesCostTraps) {
  auto Ps = programs("add,sub,neg", 2);
  CgraSpec S = homogeneousArch("g", 2, 2, OpSet::parse("add,xor"));
  auto Rules = builtinRuleset(RuleSet::Int);
  CompilerUnderTest Greedy, Hybrid;
  Greedy.Rewriter = RewriterKind::Greedy;
  Hybrid.Rewriter = RewriterKind::Hybrid;
  CeilingReport G = ceilingEstimate(Ps, Rules, Greedy, S);
  CeilingReport H = ceilingEstimate(Ps, Rules, Hybrid, S);
  EXPECT_LT(G.Estimate, 1.0);
  EXPECT_FALSE(G.Misses.empty());
  EXPECT_GE(H.Estimate, G.Estimate);
  EXPECT_TRUE(G.Excluded.empty());
}

TEST(Ceiling, ExcludesUnknownResults) {
  auto Ps = programs("add,sub", 1);
  CgraSpec S = homogeneousArch("g", 1, 1, {OpKind::Add});
  CompilerUnderTest Greedy;
  Greedy.Rewriter = RewriterKind::Greedy;
  CompilerUnderTest Starved;
  Starved.Rewriter = RewriterKind::Optimal;
  Starved.Optimal.Depth = 0;
  Starved.Optimal.Saturation.IterLimit = 0;
  CeilingReport R = ceilingEstimate(Ps, {builtinRuleset(RuleSet::Int)},
                                    Greedy, S, Starved);
  EXPECT_FALSE(R.Excluded.empty());
  EXPECT_EQ(R.Counted + R.Excluded.size(), Ps.size());
}

TEST(RewriterKind, Names) {
  for (RewriterKind K : {RewriterKind::None, RewriterKind::Greedy,
                         RewriterKind::Eqsat, RewriterKind::Hybrid,
                         RewriterKind::Optimal})
    EXPECT_EQ(rewriterKindFromName(rewriterKindName(K)), K);
  EXPECT_THROW(rewriterKindFromName("x"), UnknownNameError);
}
