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

//===- Saturation.h - Equality saturation loop -------------------*- C++ -*-===//

#ifndef FLEXC_SATURATION_H
#define FLEXC_SATURATION_H

#include "flexc/EGraph.h"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flexc {

struct SaturationLimits {
  unsigned IterLimit = 10;
  size_t NodeLimit = 100'000;
  double TimeoutSeconds = 300.0;
};

enum class StopReason { Saturated, IterLimit, NodeLimit, Timeout };
std::string_view stopReasonName(StopReason R);

struct SaturationReport {
  StopReason Stop = StopReason::Saturated;
  unsigned Iterations = 0;
  size_t FinalNodeCount = 0;
  size_t FinalClassCount = 0;
  /// Applications that added a node or merged two classes, per rule name.
  std::map<std::string, uint64_t> RuleApplications;
  double Seconds = 0.0;
  /// Longest single search-and-apply round.
  double MaxBatchSeconds = 0.0;
};

/// Each iteration searches every rule against the current e-graph, then
/// applies all collected matches and rebuilds. The graph is clean on return.
SaturationReport runSaturation(EGraph &G, const std::vector<RewriteRule> &Rules,
                               const SaturationLimits &Lim = {});

} // namespace flexc

#endif // FLEXC_SATURATION_H
