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

//===- EqSat.cpp ----------------------------------------------------------===//

#include "flexc/EqSat.h"

#include <chrono>

using namespace flexc;
using Clock = std::chrono::steady_clock;

EqsatResult flexc::eqsatRewrite(const Dfg &D,
                                const std::vector<RewriteRule> &Rules,
                                const OpSet &Ops, const SaturationLimits &Lim,
                                const ExtractOptions &XOpts,
                                const EGraphInspector &Inspect) {
  EqsatResult R;
  EGraph G = egraphInit(D);
  R.InitialClasses = G.classCount();
  R.Report = runSaturation(G, Rules, Lim);
  R.SaturationSeconds = R.Report.Seconds;
  if (Inspect)
    Inspect(G);
  auto T0 = Clock::now();
  ExtractResult X = extractBest(G, Ops, XOpts);
  R.ExtractionSeconds =
      std::chrono::duration<double>(Clock::now() - T0).count();
  R.Result = std::move(X.Program);
  R.Cost = X.DagCost;
  R.TreeCost = X.TreeCost;
  R.DagExact = X.DagExact;
  return R;
}
