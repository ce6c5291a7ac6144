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

//===- RuleEquivalence.h - Semantic checks for rewrite rules -----*- C++ -*-===//

#ifndef FLEXC_RULEEQUIVALENCE_H
#define FLEXC_RULEEQUIVALENCE_H

#include "flexc/Pattern.h"

#include <cstdint>
#include <string>

namespace flexc {

struct EquivalenceReport {
  bool Passed = true;
  bool Exempt = false; // stochastic rules
  unsigned Samples = 0;
  double MaxRelError = 0.0;
  std::string Counterexample;
};

/// Evaluates both sides of \p R on inputs drawn from each variable's domain
/// and compares them under the rule's semantics class. Boolean-domain rules
/// are checked on every 0/1 assignment regardless of \p Samples.
EquivalenceReport checkRuleEquivalence(const RewriteRule &R,
                                       unsigned Samples = 1000,
                                       uint64_t Seed = 1,
                                       double RelTolerance = 1e-6);

} // namespace flexc

#endif // FLEXC_RULEEQUIVALENCE_H
