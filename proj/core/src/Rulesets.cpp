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

//===- Rulesets.cpp - Builtin rewrite rules -------------------------------===//

#include "flexc/Rulesets.h"
#include "flexc/Error.h"

#include <string>

using namespace flexc;

static constexpr std::string_view IntRules = R"rules(
[ruleset:int]
?x - ?y <=> ?x + (-?y)
?x >> ?y <=> ?x / (1 << ?y) where ?x nonneg, ?y shift
?x and ?y <=> not ((not ?x) or (not ?y))
not ?x <=> ?x xor -1
?x * -1 <=> -?x
-?x <=> (?x ^ -1) + 1
?x * 2 <=> ?x << 1
?x * 4 <=> ?x << 2
?x * 8 <=> ?x << 3
?x * 1 => ?x
?x / 2 <=> ?x >> 1 where ?x nonneg
?x / 4 <=> ?x >> 2 where ?x nonneg
?x / 8 <=> ?x >> 3 where ?x nonneg
# Disabled: the bit manipulation meant by "-x (fp) => x + 2^32 (int)" is
# ambiguous as written.
# -?x => ?x + 4294967296
# Disabled: needs a shift lookup table in memory with unknown contents.
# ?x << ?y => ?x * load(select(?y > 32, 33, ?y))
)rules";

static constexpr std::string_view FpRules = R"rules(
[ruleset:fp]
?x * ?y <=> ?x / (1.0 / ?y) where ?y nonzero
-1.0 * ?x <=> -?x
?x - ?y <=> ?x + (-?y)
)rules";

static constexpr std::string_view BoolRules = R"rules(
[ruleset:bool]
?x and ?y => ?x * ?y where ?x bool, ?y bool
?x or ?y => (?x + ?y) > 0 where ?x bool, ?y bool
?x xor ?y => ?x != ?y where ?x bool, ?y bool
)rules";

static constexpr std::string_view StochasticRules = R"rules(
[ruleset:stochastic]
?x * ?y => ?x and ?y
?x * ?y => isc_mul(?x, ?y)
)rules";

std::string_view flexc::builtinRulesetText(RuleSet S) {
  switch (S) {
  case RuleSet::Int:
    return IntRules;
  case RuleSet::Fp:
    return FpRules;
  case RuleSet::Bool:
    return BoolRules;
  case RuleSet::Stochastic:
    return StochasticRules;
  }
  return {};
}

std::vector<RewriteRule> flexc::builtinRuleset(RuleSet S) {
  return parseRuleFile(builtinRulesetText(S));
}

std::vector<RewriteRule> flexc::builtinRuleset(std::string_view Name) {
  return builtinRuleset(ruleSetFromName(Name));
}

std::vector<RewriteRule> flexc::selectRulesets(std::string_view List) {
  std::vector<RewriteRule> Out;
  size_t Pos = 0;
  while (Pos <= List.size()) {
    size_t Comma = List.find(',', Pos);
    if (Comma == std::string_view::npos)
      Comma = List.size();
    std::string_view Name = List.substr(Pos, Comma - Pos);
    Pos = Comma + 1;
    if (Name.empty())
      continue;
    for (RewriteRule &R : builtinRuleset(Name))
      Out.push_back(std::move(R));
  }
  return Out;
}
