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

//===- Bench.cpp - Corpus runner and reports ------------------------------===//

#include "flexc/Bench.h"
#include "flexc/Error.h"
#include "flexc/Parallel.h"
#include "flexc/Rulesets.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

using namespace flexc;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

static double secondsSince(Clock::time_point T) {
  return std::chrono::duration<double>(Clock::now() - T).count();
}

std::string_view flexc::outcomeName(Outcome O) {
  switch (O) {
  case Outcome::SupportedNatively:
    return "supported_natively";
  case Outcome::RewrittenGreedy:
    return "rewritten_greedy";
  case Outcome::RewrittenEqsat:
    return "rewritten_eqsat";
  case Outcome::FailedRewrite:
    return "failed_rewrite";
  case Outcome::FailedMapping:
    return "failed_mapping";
  case Outcome::Timeout:
    return "timeout";
  case Outcome::ParseFailure:
    return "parse_failure";
  }
  return "?";
}

bool flexc::isCompiled(Outcome O) {
  return O == Outcome::SupportedNatively || O == Outcome::RewrittenGreedy ||
         O == Outcome::RewrittenEqsat;
}

std::string flexc::defaultRulesets(const CgraSpec &S) {
  return S.Name == "sc_cgra" ? "int,fp,stochastic" : "int,fp";
}

std::vector<fs::path> flexc::listKernels(const fs::path &Dir) {
  std::error_code Ec;
  if (!fs::is_directory(Dir, Ec))
    throw Error("'" + Dir.string() + "' is not a directory");
  std::vector<fs::path> Files;
  for (const fs::directory_entry &E : fs::directory_iterator(Dir))
    if (E.is_regular_file() && E.path().extension() == ".dfg")
      Files.push_back(E.path());
  if (Files.empty())
    throw Error("no .dfg files in '" + Dir.string() + "'");
  std::sort(Files.begin(), Files.end());
  return Files;
}

KernelResult flexc::runKernel(const std::string &Name, const std::string &Text,
                              const CgraSpec &S, Strategy Strat,
                              const std::vector<RewriteRule> &Rules,
                              const BenchOptions &Opts) {
  KernelResult K;
  K.Kernel = Name;
  K.Arch = S.Name;
  K.Strat = Strat;
  auto Start = Clock::now();
  Dfg D;
  try {
    D = parseDfg(Text);
  } catch (const Error &E) {
    K.Result = Outcome::ParseFailure;
    K.Message = E.what();
    K.WallSeconds = secondsSince(Start);
    return K;
  }

  OpSet Ops = supportedOps(S);
  K.CostBefore = cost(D, Ops);
  Dfg Final = D;
  if (K.CostBefore < UnsupportedPenalty) {
    K.Result = Outcome::SupportedNatively;
    K.CostAfter = K.CostBefore;
  } else {
    RewriteOutcome R = rewriteWith(Strat, D, Rules, Ops, Opts.Limits);
    K.CostAfter = R.Cost;
    K.GreedySeconds = R.GreedySeconds;
    K.SaturationSeconds = R.SaturationSeconds;
    K.ExtractionSeconds = R.ExtractionSeconds;
    if (R.Report)
      K.Stop = R.Report->Stop;
    if (R.Used == Strategy::Eqsat && R.Report) {
      K.RulesApplied = R.Report->RuleApplications;
    } else {
      for (const std::string &Rule : R.GreedyTrace)
        ++K.RulesApplied[Rule];
    }
    if (R.Cost < UnsupportedPenalty)
      K.Result = R.Used == Strategy::Eqsat ? Outcome::RewrittenEqsat
                                           : Outcome::RewrittenGreedy;
    else
      K.Result = R.TimedOut ? Outcome::Timeout : Outcome::FailedRewrite;
    Final = std::move(R.Result);
  }

  if (Opts.Map && isCompiled(K.Result)) {
    auto MapStart = Clock::now();
    CompileResult C = compile(Final, S, Opts.Mapping);
    K.MappingSeconds = secondsSince(MapStart);
    if (C.Map) {
      K.Ii = C.Ii;
    } else {
      K.Result = Outcome::FailedMapping;
      K.Message = "no mapping up to II " + std::to_string(C.Ii) + " (" +
                  std::string(mapStatusName(C.LastStatus)) + ")";
    }
  }
  K.WallSeconds = secondsSince(Start);
  return K;
}

std::vector<KernelResult> flexc::runCorpus(const fs::path &Dir,
                                           const std::vector<CgraSpec> &Archs,
                                           const std::vector<Strategy> &Strategies,
                                           const BenchOptions &Opts) {
  std::vector<fs::path> Files = listKernels(Dir);
  std::vector<std::pair<std::string, std::string>> Kernels;
  for (const fs::path &F : Files) {
    std::ifstream In(F);
    std::stringstream Buf;
    if (In)
      Buf << In.rdbuf();
    // An unreadable file becomes unparsable text and a parse-failure row.
    Kernels.emplace_back(F.filename().string(), In ? Buf.str() : "\x01");
  }
  std::vector<std::vector<RewriteRule>> Rules;
  for (const CgraSpec &S : Archs)
    Rules.push_back(selectRulesets(Opts.Rulesets.empty() ? defaultRulesets(S)
                                                         : Opts.Rulesets));

  struct Job {
    size_t Arch, Strat, Kernel;
  };
  std::vector<Job> Jobs;
  for (size_t A = 0; A < Archs.size(); ++A)
    for (size_t St = 0; St < Strategies.size(); ++St)
      for (size_t K = 0; K < Kernels.size(); ++K)
        Jobs.push_back({A, St, K});
  std::vector<KernelResult> Results(Jobs.size());
  parallelFor(Jobs.size(), Opts.Threads, [&](size_t I) {
    const Job &J = Jobs[I];
    Results[I] = runKernel(Kernels[J.Kernel].first, Kernels[J.Kernel].second,
                           Archs[J.Arch], Strategies[J.Strat], Rules[J.Arch],
                           Opts);
  });
  std::stable_sort(Results.begin(), Results.end(),
                   [](const KernelResult &A, const KernelResult &B) {
                     return std::tie(A.Arch, A.Strat, A.Kernel) <
                            std::tie(B.Arch, B.Strat, B.Kernel);
                   });
  return Results;
}

BenchReport flexc::summarize(const std::vector<KernelResult> &Results,
                             size_t TopRules) {
  if (Results.empty())
    throw Error("no results to summarize");
  BenchReport R;
  std::map<std::pair<std::string, Strategy>, RateRow> Rows;
  std::map<std::string, std::map<std::string, uint64_t>> RuleCounts;
  for (const KernelResult &K : Results) {
    RateRow &Row = Rows[{K.Arch, K.Strat}];
    Row.Arch = K.Arch;
    Row.Strat = K.Strat;
    ++Row.Kernels;
    Row.Compiled += isCompiled(K.Result);
    ++Row.Outcomes[K.Result];
    Row.TotalSeconds += K.WallSeconds;
    for (const auto &[Rule, N] : K.RulesApplied)
      RuleCounts[K.Arch][Rule] += N;
    R.Times[K.Strat].push_back(K.WallSeconds);
  }
  for (auto &[Key, Row] : Rows) {
    Row.Rate = double(Row.Compiled) / double(Row.Kernels);
    R.Rates.push_back(Row);
  }
  for (auto &[S, Times] : R.Times)
    std::sort(Times.begin(), Times.end());

  for (auto &[Arch, Counts] : RuleCounts) {
    std::vector<std::pair<std::string, uint64_t>> Sorted(Counts.begin(),
                                                         Counts.end());
    std::stable_sort(Sorted.begin(), Sorted.end(),
                     [](const auto &A, const auto &B) {
                       return A.second > B.second;
                     });
    if (Sorted.size() > TopRules)
      Sorted.resize(TopRules);
    R.TopRules[Arch] = std::move(Sorted);
  }

  const std::pair<Strategy, Strategy> Pairs[] = {
      {Strategy::Hybrid, Strategy::None},
      {Strategy::Greedy, Strategy::None},
      {Strategy::Hybrid, Strategy::Greedy},
      {Strategy::Eqsat, Strategy::None},
  };
  std::map<std::string, std::map<Strategy, size_t>> Compiled;
  for (const RateRow &Row : R.Rates) {
    Compiled[Row.Arch][Row.Strat] = Row.Compiled;
    Compiled["all"][Row.Strat] += Row.Compiled;
  }
  for (const auto &[Arch, ByStrat] : Compiled)
    for (auto [Num, Den] : Pairs) {
      if (!ByStrat.count(Num) || !ByStrat.count(Den))
        continue;
      RatioRow Ratio{Arch, Num, Den, ByStrat.at(Num), ByStrat.at(Den), {}};
      if (Ratio.DenominatorCompiled)
        Ratio.Ratio =
            double(Ratio.NumeratorCompiled) / double(Ratio.DenominatorCompiled);
      R.Ratios.push_back(Ratio);
    }
  return R;
}

static std::string fmt(double V, int Digits = 6) {
  char Buf[64];
  std::snprintf(Buf, sizeof(Buf), "%.*f", Digits, V);
  return Buf;
}

static std::string csvField(const std::string &S) {
  if (S.find_first_of(",\"\n") == std::string::npos)
    return S;
  std::string Out = "\"";
  for (char C : S)
    Out += C == '"' ? std::string("\"\"") : std::string(1, C);
  return Out + "\"";
}

static const Outcome AllOutcomes[] = {
    Outcome::SupportedNatively, Outcome::RewrittenGreedy,
    Outcome::RewrittenEqsat,    Outcome::FailedRewrite,
    Outcome::FailedMapping,     Outcome::Timeout,
    Outcome::ParseFailure,
};

std::string flexc::summaryCsv(const BenchReport &R) {
  std::string Out = "arch,strategy,kernels,compiled,rate";
  for (Outcome O : AllOutcomes)
    Out += "," + std::string(outcomeName(O));
  Out += ",total_seconds\n";
  for (const RateRow &Row : R.Rates) {
    Out += csvField(Row.Arch) + "," + std::string(strategyName(Row.Strat)) +
           "," + std::to_string(Row.Kernels) + "," +
           std::to_string(Row.Compiled) + "," + fmt(Row.Rate, 4);
    for (Outcome O : AllOutcomes) {
      auto It = Row.Outcomes.find(O);
      Out += "," + std::to_string(It == Row.Outcomes.end() ? 0 : It->second);
    }
    Out += "," + fmt(Row.TotalSeconds) + "\n";
  }
  return Out;
}

std::string flexc::kernelsCsv(const std::vector<KernelResult> &Results) {
  std::string Out = "kernel,arch,strategy,outcome,cost_before,cost_after,ii,"
                    "stop_reason,rules_applied,wall_seconds,greedy_seconds,"
                    "saturation_seconds,extraction_seconds,mapping_seconds\n";
  for (const KernelResult &K : Results) {
    std::string Rules;
    for (const auto &[Name, N] : K.RulesApplied)
      Rules += (Rules.empty() ? "" : ";") + Name + ":" + std::to_string(N);
    Out += csvField(K.Kernel) + "," + csvField(K.Arch) + "," +
           std::string(strategyName(K.Strat)) + "," +
           std::string(outcomeName(K.Result)) + "," +
           std::to_string(K.CostBefore) + "," + std::to_string(K.CostAfter) +
           "," + (K.Ii ? std::to_string(*K.Ii) : "") + "," +
           (K.Stop ? std::string(stopReasonName(*K.Stop)) : "") + "," +
           csvField(Rules) + "," + fmt(K.WallSeconds) + "," +
           fmt(K.GreedySeconds) + "," + fmt(K.SaturationSeconds) + "," +
           fmt(K.ExtractionSeconds) + "," + fmt(K.MappingSeconds) + "\n";
  }
  return Out;
}

std::string flexc::ratiosCsv(const BenchReport &R) {
  std::string Out = "arch,numerator,denominator,numerator_compiled,"
                    "denominator_compiled,ratio\n";
  for (const RatioRow &Row : R.Ratios)
    Out += csvField(Row.Arch) + "," + std::string(strategyName(Row.Numerator)) +
           "," + std::string(strategyName(Row.Denominator)) + "," +
           std::to_string(Row.NumeratorCompiled) + "," +
           std::to_string(Row.DenominatorCompiled) + "," +
           (Row.Ratio ? fmt(*Row.Ratio, 4) : "") + "\n";
  return Out;
}

std::string flexc::rateSeriesCsv(const BenchReport &R) {
  std::string Out = "series,x,y\n";
  for (const RateRow &Row : R.Rates)
    Out += std::string(strategyName(Row.Strat)) + "," + csvField(Row.Arch) +
           "," + fmt(Row.Rate, 4) + "\n";
  return Out;
}

std::string flexc::timeCdfCsv(const BenchReport &R) {
  std::string Out = "strategy,wall_seconds,fraction\n";
  for (const auto &[S, Times] : R.Times)
    for (size_t I = 0; I < Times.size(); ++I)
      Out += std::string(strategyName(S)) + "," + fmt(Times[I]) + "," +
             fmt(double(I + 1) / double(Times.size()), 4) + "\n";
  return Out;
}

std::string flexc::timeHistogramCsv(const BenchReport &R) {
  static const double Edges[] = {0.001, 0.01, 0.1, 1, 10, 100, 300};
  static const char *Names[] = {"0.001", "0.01", "0.1", "1",
                                "10",    "100",  "300"};
  std::string Out = "strategy";
  for (const char *N : Names)
    Out += ",le_" + std::string(N) + "_seconds";
  Out += ",gt_300_seconds\n";
  for (const auto &[S, Times] : R.Times) {
    std::vector<size_t> Counts(std::size(Edges) + 1, 0);
    for (double T : Times)
      ++Counts[std::lower_bound(std::begin(Edges), std::end(Edges), T) -
               std::begin(Edges)];
    Out += std::string(strategyName(S));
    for (size_t N : Counts)
      Out += "," + std::to_string(N);
    Out += "\n";
  }
  return Out;
}

std::string flexc::rulesMarkdown(const BenchReport &R) {
  std::string Out = "| Architecture | Rule | Applications |\n"
                    "|---|---|---|\n";
  for (const auto &[Arch, Rules] : R.TopRules)
    for (size_t I = 0; I < Rules.size(); ++I)
      Out += "| " + (I == 0 ? Arch : std::string()) + " | `" + Rules[I].first +
             "` | " + std::to_string(Rules[I].second) + " |\n";
  return Out;
}

static void writeFile(const fs::path &P, const std::string &Text) {
  std::ofstream Out(P, std::ios::binary);
  Out << Text;
  if (!Out)
    throw Error("cannot write '" + P.string() + "'");
}

void flexc::emitReport(const BenchReport &R,
                       const std::vector<KernelResult> &Results,
                       const fs::path &Dir) {
  std::error_code Ec;
  fs::create_directories(Dir, Ec);
  if (Ec)
    throw Error("cannot create '" + Dir.string() + "': " + Ec.message());
  writeFile(Dir / "summary.csv", summaryCsv(R));
  writeFile(Dir / "kernels.csv", kernelsCsv(Results));
  writeFile(Dir / "ratios.csv", ratiosCsv(R));
  writeFile(Dir / "rates.csv", rateSeriesCsv(R));
  writeFile(Dir / "time_cdf.csv", timeCdfCsv(R));
  writeFile(Dir / "time_histogram.csv", timeHistogramCsv(R));
  writeFile(Dir / "rules.md", rulesMarkdown(R));
}
