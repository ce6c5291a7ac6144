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

//===- PatternTest.cpp ----------------------------------------------------===//

#include "flexc/Error.h"
#include "flexc/Pattern.h"

#include <gtest/gtest.h>

using namespace flexc;

static std::string lhs(const RewriteRule &R) {
  return printPattern(R.Lhs, R.VarNames);
}
static std::string rhs(const RewriteRule &R) {
  return printPattern(R.Rhs, R.VarNames);
}

TEST(PatternParse, OneDirection) {
  auto Rs = parseRule("?x * -1 => -?x");
  ASSERT_EQ(Rs.size(), 1u);
  const RewriteRule &R = Rs[0];
  EXPECT_EQ(R.Lhs.Nodes[R.Lhs.Outputs[0]].Op, OpKind::Mul);
  EXPECT_EQ(R.Rhs.Nodes[R.Rhs.Outputs[0]].Op, OpKind::Neg);
  EXPECT_EQ(R.VarNames.size(), 1u);
  EXPECT_EQ(R.Sem, Semantics::Exact);
}

TEST(PatternParse, Bidirectional) {
  auto Rs = parseRule("?x - ?y <=> ?x + (-?y)");
  ASSERT_EQ(Rs.size(), 2u);
  EXPECT_EQ(lhs(Rs[0]), rhs(Rs[1]));
  EXPECT_EQ(rhs(Rs[0]), lhs(Rs[1]));
  EXPECT_EQ(Rs[0].Rhs.Nodes[Rs[0].Rhs.Outputs[0]].Op, OpKind::Add);
}

TEST(PatternParse, Errors) {
  EXPECT_THROW(parseRule("?x => ?x + ?z"), ParseError);
  EXPECT_THROW(parseRule("?x + ?y"), ParseError);
  EXPECT_THROW(parseRule("?x + => ?x"), ParseError);
  EXPECT_THROW(parseRule("?x * ?y <=> ?x"), ParseError);
  EXPECT_THROW(parseRule("frob(?x) => ?x"), ParseError);
  EXPECT_THROW(parseRule("?x + 1.5 => ?x"), ParseError);
}

TEST(PatternParse, DomainsAndNames) {
  auto Rs = parseRule("half: ?x / 2 => ?x >> 1 where ?x nonneg");
  ASSERT_EQ(Rs.size(), 1u);
  EXPECT_EQ(Rs[0].Name, "half");
  EXPECT_EQ(Rs[0].Domains[0], Domain::NonNeg);
}

TEST(PatternParse, FloatRulesUseFloatOps) {
  auto Rs = parseRule("-1.0 * ?x <=> -?x", RuleSet::Fp);
  ASSERT_EQ(Rs.size(), 2u);
  EXPECT_EQ(Rs[0].Lhs.Nodes[Rs[0].Lhs.Outputs[0]].Op, OpKind::FMul);
  EXPECT_EQ(Rs[0].Rhs.Nodes[Rs[0].Rhs.Outputs[0]].Op, OpKind::FNeg);
  EXPECT_EQ(Rs[0].Sem, Semantics::FpRelaxed);
}

TEST(PatternParse, PrintReparses) {
  for (const char *Text :
       {"?x - ?y => ?x + (-?y)", "(?x ^ -1) + 1 => -?x",
        "not ((not ?x) or (not ?y)) => ?x and ?y",
        "?x >> ?y => ?x / (1 << ?y)", "?a * 8 => ?a << 3"}) {
    RewriteRule R = parseRule(Text)[0];
    RewriteRule Again = parseRule(lhs(R) + " => " + rhs(R))[0];
    EXPECT_EQ(lhs(Again), lhs(R)) << Text;
    EXPECT_EQ(rhs(Again), rhs(R)) << Text;
  }
}

TEST(PatternParse, RuleFileSections) {
  auto Rs = parseRuleFile("# comment\n[ruleset:fp]\n-1.0 * ?x => -?x\n"
                          "[ruleset:int]\n?x * 1 => ?x\n");
  ASSERT_EQ(Rs.size(), 2u);
  EXPECT_EQ(Rs[0].Set, RuleSet::Fp);
  EXPECT_EQ(Rs[1].Set, RuleSet::Int);
  EXPECT_THROW(parseRuleFile("[ruleset:bogus]\n"), ParseError);
}

TEST(Pattern, ToDfg) {
  RewriteRule R = parseRule("(?x ^ -1) + 1 => -?x")[0];
  Dfg D = patternToDfg(R.Lhs, R.VarNames);
  EXPECT_EQ(D.numOps(), 2u);
  EXPECT_EQ(cost(D, {OpKind::Add, OpKind::Xor}), 2u);
}
