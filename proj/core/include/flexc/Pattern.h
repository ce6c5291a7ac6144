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

//===- Pattern.h - Rewrite patterns and rules --------------------*- C++ -*-===//
//
// Rule grammar (one rule per line):
//
//   [name:] lhs (=> | <=>) rhs [where ?v domain, ...]
//
// Expressions use C precedence over | ^ & == != < > <= >= << >> + - * /,
// prefix - ~ not, word operators and/or/xor/not, and call syntax op(args)
// for any operation. Comma separated expressions form multi-output patterns.
//
//===----------------------------------------------------------------------===//

#ifndef FLEXC_PATTERN_H
#define FLEXC_PATTERN_H

#include "flexc/Dfg.h"
#include "flexc/Op.h"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace flexc {

struct PatNode {
  bool IsVar = false;
  unsigned Var = 0; // index into RewriteRule::VarNames
  OpKind Op = OpKind::Const;
  int32_t Imm = 0;
  double FImm = 0.0;
  std::vector<uint32_t> Children;
};

/// Nodes are stored children-first; Outputs index into Nodes.
struct Pattern {
  std::vector<PatNode> Nodes;
  std::vector<uint32_t> Outputs;

  /// Variables reachable from the outputs.
  std::vector<unsigned> vars() const;
};

enum class RuleSet : uint8_t { Int, Fp, Bool, Stochastic };
enum class Semantics : uint8_t { Exact, FpRelaxed, BooleanDomain, Stochastic };

/// Sampling domain of a rule variable for the equivalence tester.
enum class Domain : uint8_t { Any, NonNeg, Shift, NonZero, Bool, Finite };

struct RewriteRule {
  std::string Name;
  Pattern Lhs;
  Pattern Rhs;
  std::vector<std::string> VarNames;
  std::vector<Domain> Domains; // parallel to VarNames
  RuleSet Set = RuleSet::Int;
  Semantics Sem = Semantics::Exact;
};

std::string_view ruleSetName(RuleSet S);
RuleSet ruleSetFromName(std::string_view Name);
std::string_view semanticsName(Semantics S);
Semantics defaultSemantics(RuleSet S);

/// Parses one rule line. `<=>` yields the forward then the reverse rule.
/// In float mode arithmetic maps to fadd/fsub/fmul/fdiv/fneg and numeric
/// literals become fconst.
std::vector<RewriteRule> parseRule(std::string_view Line,
                                   RuleSet Set = RuleSet::Int);

/// Parses a rule file with `[ruleset:NAME]` sections and `#` comments.
std::vector<RewriteRule> parseRuleFile(std::string_view Text);

std::string printPattern(const Pattern &P,
                         const std::vector<std::string> &VarNames);

/// Instantiates a pattern as a Dfg whose variables are inputs named after
/// the variables (without the leading '?').
Dfg patternToDfg(const Pattern &P, const std::vector<std::string> &VarNames);

} // namespace flexc

#endif // FLEXC_PATTERN_H
