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

//===- Extract.h - Cost-based extraction from an e-graph ---------*- C++ -*-===//

#ifndef FLEXC_EXTRACT_H
#define FLEXC_EXTRACT_H

#include "flexc/EGraph.h"

#include <cstdint>
#include <limits>
#include <vector>

namespace flexc {

constexpr uint64_t InfiniteCost = std::numeric_limits<uint64_t>::max();
/// Finite costs saturate here; unshared tree costs of deep graphs overflow.
constexpr uint64_t MaxFiniteCost = InfiniteCost - 1;

struct ExtractOptions {
  /// Branch-and-bound expansions for the shared-subterm search.
  uint64_t DagSearchSteps = 200'000;
  /// Seed the search with the selection that reproduces the source graph.
  bool UseOrigins = true;
};

struct ExtractResult {
  Dfg Program;
  /// cost() of Program: every selected class counted once.
  uint64_t DagCost = 0;
  /// Minimum over represented terms of the unshared tree cost, summed over
  /// the roots.
  uint64_t TreeCost = 0;
  /// True if the shared-subterm search ran to completion.
  bool DagExact = false;
};

/// Per-node cost: 0 for leaves, 1 if supported, UnsupportedPenalty else.
uint64_t enodeCost(const ENode &N, const OpSet &Ops);

/// Per-class minimum tree cost (InfiniteCost if no finite term exists),
/// indexed by class id. \p G must be clean.
std::vector<uint64_t> treeCosts(const EGraph &G, const OpSet &Ops);

/// Throws ExtractionError if some root has no finite term.
ExtractResult extractBest(const EGraph &G, const OpSet &Ops,
                          const ExtractOptions &Opts = {});

} // namespace flexc

#endif // FLEXC_EXTRACT_H
