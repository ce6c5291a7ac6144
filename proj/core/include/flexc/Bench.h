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

//===- Bench.h - Corpus runner and reports -----------------------*- C++ -*-===//
//
// CSV schemas (stable; every column ending in "_seconds" is a wall-clock
// measurement, all other columns are deterministic):
//
//   summary.csv   arch,strategy,kernels,compiled,rate,supported_natively,
//                 rewritten_greedy,rewritten_eqsat,failed_rewrite,
//                 failed_mapping,timeout,parse_failure,total_seconds
//   kernels.csv   kernel,arch,strategy,outcome,cost_before,cost_after,ii,
//                 stop_reason,rules_applied,wall_seconds,greedy_seconds,
//                 saturation_seconds,extraction_seconds,mapping_seconds
//   ratios.csv    arch,numerator,denominator,numerator_compiled,
//                 denominator_compiled,ratio
//   rates.csv     series,x,y         (plot data: one series per strategy)
//   time_cdf.csv  strategy,wall_seconds,fraction
//   time_histogram.csv  strategy,le_0.001_seconds,...,le_300_seconds,
//                       gt_300_seconds   (kernel counts per wall-time bucket)
//
// rules.md holds the most frequently applied rules per architecture.
//
//===----------------------------------------------------------------------===//

#ifndef FLEXC_BENCH_H
#define FLEXC_BENCH_H

#include "flexc/Cgra.h"
#include "flexc/Hybrid.h"
#include "flexc/Mapper.h"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flexc {

enum class Outcome {
  SupportedNatively,
  RewrittenGreedy,
  RewrittenEqsat,
  FailedRewrite,
  FailedMapping,
  Timeout,
  ParseFailure,
};
std::string_view outcomeName(Outcome O);
bool isCompiled(Outcome O);

struct KernelResult {
  std::string Kernel;
  std::string Arch;
  Strategy Strat = Strategy::Hybrid;
  Outcome Result = Outcome::FailedRewrite;
  uint64_t CostBefore = 0, CostAfter = 0;
  std::optional<unsigned> Ii;
  std::optional<StopReason> Stop;
  std::map<std::string, uint64_t> RulesApplied;
  std::string Message;

  double WallSeconds = 0, GreedySeconds = 0, SaturationSeconds = 0,
         ExtractionSeconds = 0, MappingSeconds = 0;
};

struct BenchOptions {
  /// Comma-separated ruleset names; empty selects defaultRulesets(arch).
  std::string Rulesets;
  SaturationLimits Limits;
  bool Map = false;
  MapBudget Mapping;
  unsigned Threads = 1;
};

/// int and fp everywhere, plus stochastic for the stochastic-computing
/// profile.
std::string defaultRulesets(const CgraSpec &S);

/// The *.dfg files of \p Dir in name order. Throws Error if there are none.
std::vector<std::filesystem::path> listKernels(const std::filesystem::path &Dir);

KernelResult runKernel(const std::string &Name, const std::string &Text,
                       const CgraSpec &S, Strategy Strat,
                       const std::vector<RewriteRule> &Rules,
                       const BenchOptions &Opts);

/// Runs every kernel of \p Dir for every (arch, strategy) pair. Results are
/// sorted by arch, strategy and kernel name.
std::vector<KernelResult> runCorpus(const std::filesystem::path &Dir,
                                    const std::vector<CgraSpec> &Archs,
                                    const std::vector<Strategy> &Strategies,
                                    const BenchOptions &Opts);

struct RateRow {
  std::string Arch;
  Strategy Strat = Strategy::None;
  size_t Kernels = 0, Compiled = 0;
  double Rate = 0;
  std::map<Outcome, size_t> Outcomes;
  double TotalSeconds = 0;
};

struct RatioRow {
  std::string Arch; // "all" for the aggregate
  Strategy Numerator, Denominator;
  size_t NumeratorCompiled = 0, DenominatorCompiled = 0;
  /// Empty when the denominator compiled nothing.
  std::optional<double> Ratio;
};

struct BenchReport {
  std::vector<RateRow> Rates;
  std::vector<RatioRow> Ratios;
  /// Per arch: rule name and count, most frequent first.
  std::map<std::string, std::vector<std::pair<std::string, uint64_t>>>
      TopRules;
  /// Per strategy: sorted wall times.
  std::map<Strategy, std::vector<double>> Times;
};

BenchReport summarize(const std::vector<KernelResult> &Results,
                      size_t TopRules = 4);

std::string summaryCsv(const BenchReport &R);
std::string kernelsCsv(const std::vector<KernelResult> &Results);
std::string ratiosCsv(const BenchReport &R);
std::string rateSeriesCsv(const BenchReport &R);
std::string timeCdfCsv(const BenchReport &R);
std::string timeHistogramCsv(const BenchReport &R);
std::string rulesMarkdown(const BenchReport &R);

/// Writes every report file into \p Dir, creating it if needed.
void emitReport(const BenchReport &R, const std::vector<KernelResult> &Results,
                const std::filesystem::path &Dir);

} // namespace flexc

#endif // FLEXC_BENCH_H
