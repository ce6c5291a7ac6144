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

//===- Saturation.cpp -----------------------------------------------------===//

#include "flexc/Saturation.h"

#include "Deadline.h"

#include <chrono>

using namespace flexc;
using Clock = std::chrono::steady_clock;

std::string_view flexc::stopReasonName(StopReason R) {
  switch (R) {
  case StopReason::Saturated:
    return "saturated";
  case StopReason::IterLimit:
    return "iter_limit";
  case StopReason::NodeLimit:
    return "node_limit";
  case StopReason::Timeout:
    return "timeout";
  }
  return "?";
}

static double since(Clock::time_point T) {
  return std::chrono::duration<double>(Clock::now() - T).count();
}

SaturationReport flexc::runSaturation(EGraph &G,
                                      const std::vector<RewriteRule> &Rules,
                                      const SaturationLimits &Lim) {
  SaturationReport Rep;
  const auto Start = Clock::now();
  const auto Deadline = deadlineAfter(Lim.TimeoutSeconds);
  G.rebuild();

  auto Finish = [&](StopReason R) {
    G.rebuild();
    Rep.Stop = R;
    Rep.FinalNodeCount = G.nodeCount();
    Rep.FinalClassCount = G.classCount();
    Rep.Seconds = since(Start);
    return Rep;
  };

  for (unsigned Iter = 1;; ++Iter) {
    if (Iter > Lim.IterLimit)
      return Finish(StopReason::IterLimit);
    if (G.nodeCount() > Lim.NodeLimit)
      return Finish(StopReason::NodeLimit);
    const auto BatchStart = Clock::now();
    Rep.Iterations = Iter;

    std::vector<MatchSet> Found;
    Found.reserve(Rules.size());
    for (size_t R = 0; R < Rules.size(); ++R) {
      if (Clock::now() > Deadline)
        return Finish(StopReason::Timeout);
      bool TimedOut = false;
      Found.push_back(ematch(G, Rules[R].Lhs, Rules[R].VarNames.size(),
                             Deadline, &TimedOut));
      if (TimedOut)
        return Finish(StopReason::Timeout);
    }

    bool Changed = false;
    size_t Applied = 0;
    for (size_t R = 0; R < Rules.size(); ++R) {
      for (size_t I = 0; I < Found[R].size(); ++I) {
        if ((++Applied & 255) == 0 && Clock::now() > Deadline) {
          Rep.MaxBatchSeconds = std::max(Rep.MaxBatchSeconds, since(BatchStart));
          return Finish(StopReason::Timeout);
        }
        size_t Before = G.nodeCount();
        bool Merged = false;
        auto Rhs = instantiate(G, Rules[R].Rhs, Found[R].subst(I));
        auto Roots = Found[R].roots(I);
        for (size_t J = 0; J < Rhs.size(); ++J) {
          if (G.find(Rhs[J]) != G.find(Roots[J])) {
            G.merge(Rhs[J], Roots[J]);
            Merged = true;
          }
        }
        if (Merged || G.nodeCount() != Before) {
          Changed = true;
          ++Rep.RuleApplications[Rules[R].Name];
        }
        if (G.nodeCount() > Lim.NodeLimit) {
          Rep.MaxBatchSeconds =
              std::max(Rep.MaxBatchSeconds, since(BatchStart));
          return Finish(StopReason::NodeLimit);
        }
      }
    }
    G.rebuild();
    Rep.MaxBatchSeconds = std::max(Rep.MaxBatchSeconds, since(BatchStart));
    if (!Changed)
      return Finish(StopReason::Saturated);
  }
}
