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

//===- EqSat.h - Equality saturation rewriting -------------------*- C++ -*-===//

#ifndef FLEXC_EQSAT_H
#define FLEXC_EQSAT_H

#include "flexc/Extract.h"
#include "flexc/Saturation.h"

#include <functional>

namespace flexc {

using EGraphInspector = std::function<void(const EGraph &)>;

struct EqsatResult {
  Dfg Result;
  uint64_t Cost = 0;
  SaturationReport Report;
  uint64_t TreeCost = 0;
  bool DagExact = false;
  size_t InitialClasses = 0;
  double SaturationSeconds = 0.0;
  double ExtractionSeconds = 0.0;
};

/// Initializes an e-graph from \p D, saturates and extracts. The optional
/// callback sees the saturated e-graph before extraction.
EqsatResult
eqsatRewrite(const Dfg &D, const std::vector<RewriteRule> &Rules,
             const OpSet &Ops, const SaturationLimits &Lim = {},
             const ExtractOptions &XOpts = {},
             const EGraphInspector &Inspect = {});

} // namespace flexc

#endif // FLEXC_EQSAT_H
