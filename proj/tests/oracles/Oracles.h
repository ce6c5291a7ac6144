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

//===- Oracles.h - Reference implementations for tests ----------*- C++ -*-===//
//
// Slow, straightforward reimplementations used only to check the library.
// None of them share code with the algorithms they check.
//
//===----------------------------------------------------------------------===//

#ifndef FLEXC_TESTS_ORACLES_H
#define FLEXC_TESTS_ORACLES_H

#include "flexc/Cgra.h"
#include "flexc/Dfg.h"
#include "flexc/EGraph.h"
#include "flexc/Pattern.h"

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace flexc::oracle {

/// Quadratic congruence closure over explicitly added terms.
class NaiveCongruence {
public:
  size_t addTerm(OpKind Op, int64_t Lit, std::vector<size_t> Kids);
  void merge(size_t A, size_t B);
  /// Merges congruent terms until nothing changes.
  void close();
  bool same(size_t A, size_t B) const { return root(A) == root(B); }
  size_t size() const { return Terms.size(); }

private:
  struct Term {
    OpKind Op;
    int64_t Lit;
    std::vector<size_t> Kids;
  };
  size_t root(size_t A) const;
  std::vector<Term> Terms;
  std::vector<size_t> Parent;
};

/// Simple-cycle enumeration: max over cycles of ceil(ops / distance).
unsigned cycleRecMii(const Dfg &D);

struct FeasibilityResult {
  bool Feasible = false;
  /// False when the step budget ran out before a decision.
  bool Complete = true;
  uint64_t Steps = 0;
};

/// Decides whether a modulo schedule with \p Ii exists by enumerating a
/// (PE, slot mod Ii) pair for every operation and solving the remaining
/// difference constraints. Requires a register on every PE.
FeasibilityResult exhaustiveFeasible(const Dfg &D, const CgraSpec &S,
                                     unsigned Ii, uint64_t MaxSteps);

/// Minimum over terms of height <= class count of the unshared cost,
/// summed over the roots.
uint64_t bruteTreeCost(const EGraph &G, const OpSet &Ops);

/// Minimum shared cost over acyclic per-class selections reachable from
/// the roots, or nullopt if \p MaxSteps is exceeded.
std::optional<uint64_t> bruteDagCost(const EGraph &G, const OpSet &Ops,
                                     uint64_t MaxSteps);

/// (root, bindings) of every match of a single-output rule, found by
/// enumerating all maps from pattern nodes to graph nodes.
using MatchKey = std::pair<uint32_t, std::vector<Operand>>;
std::set<MatchKey> bruteMatches(const Dfg &D, const RewriteRule &R);

} // namespace flexc::oracle

#endif // FLEXC_TESTS_ORACLES_H
