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

//===- Rulesets.h - Builtin rewrite rules ------------------------*- C++ -*-===//

#ifndef FLEXC_RULESETS_H
#define FLEXC_RULESETS_H

#include "flexc/Pattern.h"

#include <string_view>
#include <vector>

namespace flexc {

/// Source text of the builtin rule files, one per ruleset.
std::string_view builtinRulesetText(RuleSet S);

std::vector<RewriteRule> builtinRuleset(RuleSet S);
std::vector<RewriteRule> builtinRuleset(std::string_view Name);

/// Concatenates the builtin rulesets named in a comma separated list such
/// as "int,fp". Stochastic rules are only present when named explicitly.
std::vector<RewriteRule> selectRulesets(std::string_view List);

} // namespace flexc

#endif // FLEXC_RULESETS_H
