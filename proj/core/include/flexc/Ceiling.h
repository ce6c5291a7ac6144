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

//===- Ceiling.h - Performance ceiling estimation ----------------*- C++ -*-===//
//
// A compiler under test succeeds on a program when its rewriter leaves no
// unsupported operation and, if mapping is enabled, a mapping is found. The
// ceiling of a heuristic compiler is the fraction of programs on which
// "the optimal compiler succeeds" implies "the heuristic succeeds".
//
//===----------------------------------------------------------------------===//

#ifndef FLEXC_CEILING_H
#define FLEXC_CEILING_H

#include "flexc/Cgra.h"
#include "flexc/Dfg.h"
#include "flexc/Hybrid.h"
#include "flexc/Mapper.h"

#include <optional>
#include <string_view>
#include <vector>

namespace flexc {

struct OptimalRewriteLimits {
  /// Rule applications explored breadth-first.
  unsigned Depth = 5;
  /// Distinct programs kept by the breadth-first search.
  size_t MaxStates = 20'000;
  /// Larger inputs are rejected.
  unsigned MaxOps = 8;
  /// Fallback run to a fixpoint when the search finds nothing.
  SaturationLimits Saturation{64, 200'000, 60.0};
};

enum class OptimalStatus { Found, Unreachable, BudgetExceeded };
std::string_view optimalStatusName(OptimalStatus S);

struct OptimalRewriteResult {
  OptimalStatus Status = OptimalStatus::BudgetExceeded;
  std::optional<Dfg> Program;
  /// Rule applications on the path to Program, when found by the search.
  unsigned Depth = 0;
  bool FoundBySaturation = false;
  size_t StatesExplored = 0;
};

/// Exhaustive rewriting oracle. Unreachable is reported only when the
/// saturated e-graph of \p D holds no supported program.
OptimalRewriteResult optimalRewrite(const Dfg &D,
                                    const std::vector<RewriteRule> &Rules,
                                    const OpSet &Ops,
                                    const OptimalRewriteLimits &Lim = {});

enum class RewriterKind { None, Greedy, Eqsat, Hybrid, Optimal };
enum class MapperKind { Off, Heuristic, Optimal };
std::string_view rewriterKindName(RewriterKind K);
RewriterKind rewriterKindFromName(std::string_view Name);

struct CompilerUnderTest {
  RewriterKind Rewriter = RewriterKind::Hybrid;
  MapperKind Mapper = MapperKind::Off;
  SaturationLimits Limits;
  OptimalRewriteLimits Optimal;
  MapBudget Mapping;
  /// Size bound for the optimal mapper.
  unsigned OptimalMapperMaxOps = 8;
};

struct CompileAttempt {
  bool Success = false;
  /// The optimal components hit a limit; the result is unknown.
  bool BudgetExceeded = false;
  uint64_t Cost = 0;
  std::optional<unsigned> Ii;
};

CompileAttempt runCompiler(const CompilerUnderTest &C, const Dfg &D,
                           const std::vector<RewriteRule> &Rules,
                           const CgraSpec &S);

/// Fraction of \p Programs on which \p C succeeds. Attempts whose result is
/// unknown count as failures.
double suppFraction(const std::vector<Dfg> &Programs,
                    const std::vector<RewriteRule> &Rules,
                    const CompilerUnderTest &C, const CgraSpec &S,
                    unsigned Threads = 1);

struct CeilingReport {
  size_t Counted = 0;
  /// Programs where the optimal compiler's result is unknown.
  std::vector<size_t> Excluded;
  size_t OptimalSuccesses = 0;
  size_t HeuristicSuccesses = 0;
  /// Programs where the optimal compiler succeeds and the heuristic fails.
  std::vector<size_t> Misses;
  double Estimate = 1.0;
};

/// \p Optimal defaults to the optimal rewriter, with the optimal mapper when
/// \p Heuristic maps.
CeilingReport ceilingEstimate(const std::vector<Dfg> &Programs,
                              const std::vector<RewriteRule> &Rules,
                              const CompilerUnderTest &Heuristic,
                              const CgraSpec &S,
                              std::optional<CompilerUnderTest> Optimal = {},
                              unsigned Threads = 1);

} // namespace flexc

#endif // FLEXC_CEILING_H
