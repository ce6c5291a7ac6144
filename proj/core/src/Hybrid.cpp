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

//===- Hybrid.cpp ---------------------------------------------------------===//

#include "flexc/Hybrid.h"
#include "flexc/Error.h"

#include "Deadline.h"

#include <chrono>

using namespace flexc;
using Clock = std::chrono::steady_clock;

std::string_view flexc::strategyName(Strategy S) {
  switch (S) {
  case Strategy::None:
    return "none";
  case Strategy::Greedy:
    return "greedy";
  case Strategy::Eqsat:
    return "eqsat";
  case Strategy::Hybrid:
    return "hybrid";
  }
  return "?";
}

Strategy flexc::strategyFromName(std::string_view Name) {
  for (Strategy S :
       {Strategy::None, Strategy::Greedy, Strategy::Eqsat, Strategy::Hybrid})
    if (strategyName(S) == Name)
      return S;
  throw UnknownNameError("unknown strategy '" + std::string(Name) + "'");
}

static double secondsSince(Clock::time_point T) {
  return std::chrono::duration<double>(Clock::now() - T).count();
}

static RewriteOutcome runGreedy(const Dfg &D,
                                const std::vector<RewriteRule> &Rules,
                                const OpSet &Ops, const SaturationLimits &Lim) {
  RewriteOutcome Out;
  auto T0 = Clock::now();
  auto Deadline = deadlineAfter(Lim.TimeoutSeconds);
  GreedyResult G = greedyRewrite(D, Rules, Ops, Deadline);
  Out.GreedySeconds = secondsSince(T0);
  Out.Result = std::move(G.Result);
  Out.Cost = G.Cost;
  Out.GreedyTrace = std::move(G.Trace);
  Out.Used = Strategy::Greedy;
  Out.TimedOut = G.TimedOut;
  return Out;
}

static void runEqsat(RewriteOutcome &Out, const Dfg &D,
                     const std::vector<RewriteRule> &Rules, const OpSet &Ops,
                     const SaturationLimits &Lim, const ExtractOptions &XOpts,
                     const EGraphInspector &Inspect) {
  EqsatResult E = eqsatRewrite(D, Rules, Ops, Lim, XOpts, Inspect);
  Out.Result = std::move(E.Result);
  Out.Cost = E.Cost;
  Out.Used = Strategy::Eqsat;
  Out.Report = E.Report;
  Out.TimedOut = E.Report.Stop == StopReason::Timeout;
  Out.SaturationSeconds = E.SaturationSeconds;
  Out.ExtractionSeconds = E.ExtractionSeconds;
}

RewriteOutcome flexc::hybridRewrite(const Dfg &D,
                                    const std::vector<RewriteRule> &Rules,
                                    const OpSet &Ops,
                                    const SaturationLimits &Lim,
                                    const ExtractOptions &XOpts,
                                    const EGraphInspector &Inspect) {
  RewriteOutcome Out = runGreedy(D, Rules, Ops, Lim);
  if (Out.Cost < UnsupportedPenalty)
    return Out;
  runEqsat(Out, D, Rules, Ops, Lim, XOpts, Inspect);
  return Out;
}

RewriteOutcome flexc::rewriteWith(Strategy S, const Dfg &D,
                                  const std::vector<RewriteRule> &Rules,
                                  const OpSet &Ops, const SaturationLimits &Lim,
                                  const ExtractOptions &XOpts,
                                  const EGraphInspector &Inspect) {
  switch (S) {
  case Strategy::None: {
    RewriteOutcome Out;
    Out.Result = D;
    Out.Cost = cost(D, Ops);
    return Out;
  }
  case Strategy::Greedy:
    return runGreedy(D, Rules, Ops, Lim);
  case Strategy::Eqsat: {
    RewriteOutcome Out;
    runEqsat(Out, D, Rules, Ops, Lim, XOpts, Inspect);
    return Out;
  }
  case Strategy::Hybrid:
    break;
  }
  return hybridRewrite(D, Rules, Ops, Lim, XOpts, Inspect);
}
