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

//===- RulesetsTest.cpp ---------------------------------------------------===//

#include "flexc/Dfg.h"
#include "flexc/Error.h"
#include "flexc/RuleEquivalence.h"
#include "flexc/Rulesets.h"

#include <gtest/gtest.h>

using namespace flexc;

TEST(Rulesets, AllParseAndCarryTheirSet) {
  for (RuleSet S : {RuleSet::Int, RuleSet::Fp, RuleSet::Bool,
                    RuleSet::Stochastic}) {
    auto Rs = builtinRuleset(S);
    EXPECT_FALSE(Rs.empty());
    for (const RewriteRule &R : Rs) {
      EXPECT_EQ(R.Set, S);
      EXPECT_EQ(R.Sem, defaultSemantics(S));
    }
  }
  EXPECT_THROW(builtinRuleset("nope"), UnknownNameError);
}

TEST(Rulesets, VariablesOfRhsBoundByLhs) {
  for (const RewriteRule &R : selectRulesets("int,fp,bool,stochastic")) {
    auto L = R.Lhs.vars();
    for (unsigned V : R.Rhs.vars())
      EXPECT_NE(std::find(L.begin(), L.end(), V), L.end()) << R.Name;
    EXPECT_EQ(R.Lhs.Outputs.size(), R.Rhs.Outputs.size());
  }
}

TEST(Rulesets, IntContainsTwosComplementChain) {
  auto Rs = builtinRuleset(RuleSet::Int);
  auto Has = [&](const std::string &Name) {
    for (const RewriteRule &R : Rs)
      if (R.Name == Name)
        return true;
    return false;
  };
  EXPECT_TRUE(Has("?x - ?y => ?x + (-?y)"));
  EXPECT_TRUE(Has("-?x => (?x ^ -1) + 1"));
}

TEST(Rulesets, SelectionIsExplicit) {
  auto Default = selectRulesets("int,fp");
  for (const RewriteRule &R : Default)
    EXPECT_NE(R.Set, RuleSet::Stochastic);
  EXPECT_TRUE(selectRulesets("").empty());
  size_t N = selectRulesets("int").size() + selectRulesets("fp").size();
  EXPECT_EQ(Default.size(), N);
}

TEST(RuleEquivalence, BuiltinsPass) {
  for (const RewriteRule &R : selectRulesets("int,fp,bool,stochastic")) {
    EquivalenceReport E = checkRuleEquivalence(R);
    EXPECT_TRUE(E.Passed) << R.Name << ": " << E.Counterexample;
    EXPECT_EQ(E.Exempt, R.Sem == Semantics::Stochastic) << R.Name;
  }
}

TEST(RuleEquivalence, CatchesUnsoundRules) {
  for (const char *Bad : {"?x - ?y => ?y - ?x", "?x * 2 => ?x << 2",
                          "?x >> 1 => ?x / 2", "not ?x => -?x"}) {
    RewriteRule R = parseRule(Bad)[0];
    EquivalenceReport E = checkRuleEquivalence(R);
    EXPECT_FALSE(E.Passed) << Bad;
    EXPECT_FALSE(E.Counterexample.empty()) << Bad;
  }
  RewriteRule F = parseRule("?x * ?y => ?x + ?y", RuleSet::Fp)[0];
  EXPECT_FALSE(checkRuleEquivalence(F).Passed);
  RewriteRule B =
      parseRule("?x or ?y => ?x + ?y where ?x bool, ?y bool", RuleSet::Bool)[0];
  EXPECT_FALSE(checkRuleEquivalence(B).Passed);
}
