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

//===- Matcher.h - Pattern matching on concrete dataflow graphs --*- C++ -*-===//

#ifndef FLEXC_MATCHER_H
#define FLEXC_MATCHER_H

#include "flexc/Dfg.h"
#include "flexc/Pattern.h"

#include <cstdint>
#include <vector>

namespace flexc {

struct Match {
  /// Target node matched by each lhs output, in pattern output order.
  std::vector<uint32_t> Roots;
  /// Operand bound to each rule variable, indexed like RewriteRule::VarNames.
  std::vector<Operand> Subst;
  /// Fingerprint of the graph the match was found in.
  uint64_t GraphFingerprint = 0;
};

/// All occurrences of the rule's lhs, ordered by root node index
/// (lexicographically for multi-output rules). Pattern operations only
/// match through distance-0 edges; variables may bind carried operands.
std::vector<Match> findMatches(const Dfg &D, const RewriteRule &R);

/// Replaces the matched roots by the instantiated rhs, redirects every use,
/// removes dead nodes and re-sorts. Throws StaleMatchError if \p D is not
/// the graph \p M was found in.
Dfg applyMatch(const Dfg &D, const Match &M, const RewriteRule &R);

} // namespace flexc

#endif // FLEXC_MATCHER_H
