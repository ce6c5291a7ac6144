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

//===- Hybrid.h - Greedy rewriting with saturation fallback ------*- C++ -*-===//

#ifndef FLEXC_HYBRID_H
#define FLEXC_HYBRID_H

#include "flexc/EqSat.h"
#include "flexc/Greedy.h"

#include <optional>
#include <string_view>

namespace flexc {

enum class Strategy { None, Greedy, Eqsat, Hybrid };
std::string_view strategyName(Strategy S);
Strategy strategyFromName(std::string_view Name);

struct RewriteOutcome {
  Dfg Result;
  uint64_t Cost = 0;
  /// Greedy or Eqsat: the pass whose result was returned.
  Strategy Used = Strategy::None;
  std::vector<std::string> GreedyTrace;
  std::optional<SaturationReport> Report;
  bool TimedOut = false;
  double GreedySeconds = 0.0;
  double SaturationSeconds = 0.0;
  double ExtractionSeconds = 0.0;
};

/// Runs greedy; if the result still contains unsupported operations, runs
/// saturation on the original graph instead.
/// \p Inspect sees the saturated e-graph whenever saturation runs.
RewriteOutcome hybridRewrite(const Dfg &D, const std::vector<RewriteRule> &Rules,
                             const OpSet &Ops, const SaturationLimits &Lim = {},
                             const ExtractOptions &XOpts = {},
                             const EGraphInspector &Inspect = {});

/// Dispatches on \p S. Strategy::None returns \p D unchanged.
RewriteOutcome rewriteWith(Strategy S, const Dfg &D,
                           const std::vector<RewriteRule> &Rules,
                           const OpSet &Ops, const SaturationLimits &Lim = {},
                           const ExtractOptions &XOpts = {},
                           const EGraphInspector &Inspect = {});

} // namespace flexc

#endif // FLEXC_HYBRID_H
