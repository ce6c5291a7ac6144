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

//===- Greedy.h - First-improvement greedy rewriting -------------*- C++ -*-===//

#ifndef FLEXC_GREEDY_H
#define FLEXC_GREEDY_H

#include "flexc/Dfg.h"
#include "flexc/Pattern.h"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace flexc {

struct GreedyResult {
  Dfg Result;
  /// Names of the accepted rules in application order.
  std::vector<std::string> Trace;
  /// Cost after each accepted application, parallel to Trace.
  std::vector<uint64_t> CostTrace;
  uint64_t Cost = 0;
  bool TimedOut = false;
};

/// Repeats passes over the rules, taking the first match of each rule that
/// strictly lowers the cost, until a pass makes no progress. The optional
/// deadline is checked between rule applications.
GreedyResult greedyRewrite(
    const Dfg &D, const std::vector<RewriteRule> &Rules, const OpSet &Ops,
    std::optional<std::chrono::steady_clock::time_point> Deadline = {});

} // namespace flexc

#endif // FLEXC_GREEDY_H
