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

//===- Greedy.cpp ---------------------------------------------------------===//

#include "flexc/Greedy.h"
#include "flexc/Matcher.h"

using namespace flexc;

GreedyResult
flexc::greedyRewrite(const Dfg &D, const std::vector<RewriteRule> &Rules,
                     const OpSet &Ops,
                     std::optional<std::chrono::steady_clock::time_point> Deadline) {
  GreedyResult R;
  R.Result = D;
  R.Cost = cost(D, Ops);
  bool LocalMinimum = false;
  while (!LocalMinimum) {
    LocalMinimum = true;
    for (const RewriteRule &Rule : Rules) {
      if (Deadline && std::chrono::steady_clock::now() > *Deadline) {
        R.TimedOut = true;
        return R;
      }
      for (const Match &M : findMatches(R.Result, Rule)) {
        Dfg Next = applyMatch(R.Result, M, Rule);
        uint64_t C = cost(Next, Ops);
        if (C < R.Cost) {
          R.Result = std::move(Next);
          R.Cost = C;
          R.Trace.push_back(Rule.Name);
          R.CostTrace.push_back(C);
          LocalMinimum = false;
          break;
        }
      }
    }
  }
  return R;
}
