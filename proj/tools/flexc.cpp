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

//===- flexc.cpp - Command line driver ------------------------------------===//
//
// Exit status: 0 on success, 1 when --strict is given and some kernel fails
// to compile (or on an internal error), 2 on a usage or input error.
//
//===----------------------------------------------------------------------===//

#include "flexc/Bench.h"
#include "flexc/Ceiling.h"
#include "flexc/Error.h"
#include "flexc/Hybrid.h"
#include "flexc/Mapper.h"
#include "flexc/Parallel.h"
#include "flexc/ProgramSpace.h"
#include "flexc/Rulesets.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace flexc;

namespace {

/// Bad flags or unreadable inputs; reported with exit status 2.
struct UsageError : Error {
  using Error::Error;
};

std::string readFile(const std::string &Path) {
  std::ifstream In(Path, std::ios::binary);
  if (!In)
    throw UsageError("cannot read '" + Path + "'");
  std::stringstream Buf;
  Buf << In.rdbuf();
  return Buf.str();
}

void writeFile(const std::string &Path, const std::string &Text) {
  if (Path == "-") {
    std::cout << Text;
    return;
  }
  std::ofstream Out(Path, std::ios::binary);
  Out << Text;
  if (!Out)
    throw UsageError("cannot write '" + Path + "'");
}

std::vector<std::string> splitList(const std::string &Text) {
  std::vector<std::string> Out;
  std::stringstream In(Text);
  for (std::string Item; std::getline(In, Item, ',');)
    if (!Item.empty())
      Out.push_back(Item);
  return Out;
}

struct TargetFlags {
  std::string ArchPath, ArchBuiltin, Ops;

  void add(CLI::App *Cmd, bool AllowOps) {
    auto *A = Cmd->add_option("--arch", ArchPath, "Architecture JSON file");
    auto *B = Cmd->add_option("--arch-builtin", ArchBuiltin,
                              "Bundled architecture: cca, maeri, revamp, "
                              "sc_cgra");
    A->excludes(B);
    if (AllowOps)
      Cmd->add_option("--ops", Ops,
                      "Target operation list instead of an architecture")
          ->excludes(A)
          ->excludes(B);
  }

  std::optional<CgraSpec> arch() const {
    if (!ArchPath.empty())
      return parseArch(readFile(ArchPath));
    if (!ArchBuiltin.empty())
      return builtinArch(ArchBuiltin);
    return std::nullopt;
  }
};

struct LimitFlags {
  SaturationLimits Lim;
  void add(CLI::App *Cmd) {
    Cmd->add_option("--iter-limit", Lim.IterLimit, "Saturation iterations")
        ->capture_default_str();
    Cmd->add_option("--node-limit", Lim.NodeLimit, "E-graph node limit")
        ->capture_default_str();
    Cmd->add_option("--timeout", Lim.TimeoutSeconds,
                    "Per-kernel rewriting cutoff in seconds")
        ->capture_default_str();
  }
};

struct RewriteFlags {
  std::string DfgPath, Rulesets, StrategyName = "hybrid", Out = "-",
                                 DumpEGraph, MappingOut;
  bool Map = false, Strict = false;
  TargetFlags Target;
  LimitFlags Limits;
};

int runRewrite(const RewriteFlags &F, bool AlwaysMap) {
  Dfg D = parseDfg(readFile(F.DfgPath));
  std::optional<CgraSpec> Arch = F.Target.arch();
  if (!Arch && F.Target.Ops.empty())
    throw UsageError("one of --arch, --arch-builtin or --ops is required");
  bool Map = F.Map || AlwaysMap;
  if (Map && !Arch)
    throw UsageError("mapping needs --arch or --arch-builtin");
  OpSet Ops = Arch ? supportedOps(*Arch) : OpSet::parse(F.Target.Ops);
  std::string RuleNames = F.Rulesets;
  if (RuleNames.empty())
    RuleNames = Arch ? defaultRulesets(*Arch) : "int,fp";
  std::vector<RewriteRule> Rules = selectRulesets(RuleNames);
  Strategy S = strategyFromName(F.StrategyName);

  EGraphInspector Inspect;
  if (!F.DumpEGraph.empty())
    Inspect = [&](const EGraph &G) {
      std::ostringstream OS;
      G.dump(OS);
      writeFile(F.DumpEGraph, OS.str());
    };
  RewriteOutcome R = rewriteWith(S, D, Rules, Ops, F.Limits.Lim, {}, Inspect);
  writeFile(F.Out, serializeDfg(R.Result));

  bool Supported = R.Cost < UnsupportedPenalty;
  std::fprintf(stderr, "cost %llu -> %llu (%s)%s\n",
               (unsigned long long)cost(D, Ops), (unsigned long long)R.Cost,
               std::string(strategyName(R.Used)).c_str(),
               Supported ? "" : ", unsupported operations remain");
  if (R.Report)
    std::fprintf(stderr, "saturation: %s after %u iterations, %zu nodes\n",
                 std::string(stopReasonName(R.Report->Stop)).c_str(),
                 R.Report->Iterations, R.Report->FinalNodeCount);
  bool Failed = !Supported;
  if (Map && Supported) {
    CompileResult C = compile(R.Result, *Arch);
    if (C.Map) {
      std::fprintf(stderr, "mapped at II %u (res %u, rec %u)\n", C.Ii,
                   C.ResMii, C.RecMii);
      if (!F.MappingOut.empty())
        writeFile(F.MappingOut, printMapping(R.Result, *Arch, *C.Map));
    } else {
      std::fprintf(stderr, "no mapping found up to II %u (%s)\n", C.Ii,
                   std::string(mapStatusName(C.LastStatus)).c_str());
      Failed = true;
    }
  }
  return Failed && F.Strict ? 1 : 0;
}

int runExplain(const RewriteFlags &F) {
  Dfg D = parseDfg(readFile(F.DfgPath));
  std::optional<CgraSpec> Arch = F.Target.arch();
  if (!Arch && F.Target.Ops.empty())
    throw UsageError("one of --arch, --arch-builtin or --ops is required");
  OpSet Ops = Arch ? supportedOps(*Arch) : OpSet::parse(F.Target.Ops);
  std::string RuleNames = F.Rulesets;
  if (RuleNames.empty())
    RuleNames = Arch ? defaultRulesets(*Arch) : "int,fp";
  std::vector<RewriteRule> Rules = selectRulesets(RuleNames);

  std::cout << "kernel: " << D.size() << " nodes, " << D.numOps()
            << " operations, cost " << cost(D, Ops) << "\n";
  for (uint32_t N : unsupportedNodes(D, Ops))
    std::cout << "  unsupported: " << D.Nodes[N].Label << " ("
              << opName(D.Nodes[N].Op) << ")\n";

  GreedyResult G = greedyRewrite(D, Rules, Ops);
  std::cout << "greedy: cost " << G.Cost << " after " << G.Trace.size()
            << " rewrites\n";
  for (size_t I = 0; I < G.Trace.size(); ++I)
    std::cout << "  " << I + 1 << ". " << G.Trace[I] << " -> cost "
              << G.CostTrace[I] << "\n";

  EqsatResult E = eqsatRewrite(D, Rules, Ops, F.Limits.Lim, {},
                               [&](const EGraph &Graph) {
                                 if (F.DumpEGraph.empty())
                                   return;
                                 std::ostringstream OS;
                                 Graph.dump(OS);
                                 writeFile(F.DumpEGraph, OS.str());
                               });
  const SaturationReport &Rep = E.Report;
  std::cout << "saturation: " << stopReasonName(Rep.Stop) << " after "
            << Rep.Iterations << " iterations; classes " << E.InitialClasses
            << " -> " << Rep.FinalClassCount << ", nodes "
            << Rep.FinalNodeCount << "\n";
  for (const auto &[Name, N] : Rep.RuleApplications)
    std::cout << "  " << Name << ": " << N << "\n";
  std::cout << "extraction: dag cost " << E.Cost << ", tree cost "
            << E.TreeCost << (E.DagExact ? "" : " (dag search truncated)")
            << "\n";
  std::cout << serializeDfg(E.Result);
  return 0;
}

struct BenchFlags {
  std::string Corpus, Archs = "cca,maeri,revamp,sc_cgra", ArchFiles,
                      Strategies = "none,greedy,hybrid", Rulesets,
                      Out = "bench_out";
  bool Map = false, Strict = false;
  unsigned Threads = 0;
  LimitFlags Limits;
};

int runBench(const BenchFlags &F) {
  std::vector<CgraSpec> Archs;
  for (const std::string &Path : splitList(F.ArchFiles))
    Archs.push_back(parseArch(readFile(Path)));
  if (Archs.empty())
    for (const std::string &Name : splitList(F.Archs))
      Archs.push_back(builtinArch(Name));
  std::vector<Strategy> Strategies;
  for (const std::string &Name : splitList(F.Strategies))
    Strategies.push_back(strategyFromName(Name));
  if (Archs.empty() || Strategies.empty())
    throw UsageError("no architectures or strategies selected");

  BenchOptions Opts;
  Opts.Rulesets = F.Rulesets;
  Opts.Limits = F.Limits.Lim;
  Opts.Map = F.Map;
  Opts.Threads = F.Threads ? std::min(F.Threads, defaultThreads())
                           : defaultThreads();
  std::vector<KernelResult> Results;
  try {
    Results = runCorpus(F.Corpus, Archs, Strategies, Opts);
  } catch (const Error &E) {
    throw UsageError(E.what());
  }
  BenchReport R = summarize(Results);
  emitReport(R, Results, F.Out);
  std::cout << summaryCsv(R) << "\n" << ratiosCsv(R);

  bool Failed = false;
  for (const KernelResult &K : Results)
    Failed |= !isCompiled(K.Result);
  return Failed && F.Strict ? 1 : 0;
}

struct CeilingFlags {
  std::string Grammar, GrammarOps, Rulesets, Strategies = "none,greedy,hybrid";
  unsigned MaxOps = 0, Inputs = 0, Sample = 0;
  uint64_t Seed = 1;
  bool Map = false;
  TargetFlags Target;
  LimitFlags Limits;
};

// Grammar files hold "key value" lines: ops <list>, inputs <n>,
// constants <list>, max_ops <n>. '#' starts a comment.
ProgramSpace readGrammar(const std::string &Text) {
  ProgramSpace S;
  std::stringstream In(Text);
  unsigned LineNo = 0;
  for (std::string Line; std::getline(In, Line);) {
    ++LineNo;
    Line = Line.substr(0, Line.find('#'));
    std::stringstream L(Line);
    std::string Key, Value;
    if (!(L >> Key))
      continue;
    L >> Value;
    try {
      if (Key == "ops")
        S.Grammar = OpSet::parse(Value);
      else if (Key == "inputs")
        S.NumInputs = std::stoul(Value);
      else if (Key == "max_ops")
        S.MaxOps = std::stoul(Value);
      else if (Key == "constants")
        for (const std::string &C : splitList(Value))
          S.Constants.push_back(std::stoi(C));
      else
        throw ParseError("unknown key '" + Key + "'", LineNo);
    } catch (const std::logic_error &) {
      throw ParseError("bad value for '" + Key + "'", LineNo);
    }
  }
  return S;
}

int runCeiling(const CeilingFlags &F) {
  ProgramSpace Space;
  if (!F.Grammar.empty())
    Space = readGrammar(readFile(F.Grammar));
  if (!F.GrammarOps.empty())
    Space.Grammar = OpSet::parse(F.GrammarOps);
  if (F.MaxOps)
    Space.MaxOps = F.MaxOps;
  if (F.Inputs)
    Space.NumInputs = F.Inputs;
  if (Space.Grammar.empty())
    throw UsageError("the program grammar has no operations");
  std::optional<CgraSpec> Arch = F.Target.arch();
  if (!Arch && !F.Target.Ops.empty()) {
    if (F.Map)
      throw UsageError("mapping needs --arch or --arch-builtin");
    Arch = homogeneousArch("ops", 1, 1, OpSet::parse(F.Target.Ops));
  }
  if (!Arch)
    throw UsageError("one of --arch, --arch-builtin or --ops is required");

  std::vector<Dfg> Programs =
      F.Sample ? samplePrograms(Space, 1, F.Sample, F.Seed)
               : enumeratePrograms(Space);
  std::vector<RewriteRule> Rules = selectRulesets(
      F.Rulesets.empty() ? defaultRulesets(*Arch) : F.Rulesets);
  unsigned Threads = defaultThreads();

  std::cout << "strategy,programs,supp_fraction,ceiling,excluded\n";
  for (const std::string &Name : splitList(F.Strategies)) {
    CompilerUnderTest C;
    C.Rewriter = rewriterKindFromName(Name);
    C.Mapper = F.Map ? MapperKind::Heuristic : MapperKind::Off;
    C.Limits = F.Limits.Lim;
    double Fraction = suppFraction(Programs, Rules, C, *Arch, Threads);
    CeilingReport R = ceilingEstimate(Programs, Rules, C, *Arch, {}, Threads);
    char Row[256];
    std::snprintf(Row, sizeof(Row), "%s,%zu,%.6f,%.6f,%zu\n", Name.c_str(),
                  Programs.size(), Fraction, R.Estimate, R.Excluded.size());
    std::cout << Row;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App App{"flexc: rewriting and mapping for heterogeneous CGRAs"};
  App.require_subcommand(1);

  RewriteFlags RW, CF, EX;
  auto AddRewrite = [](CLI::App *Cmd, RewriteFlags &F, bool Full) {
    Cmd->add_option("--dfg", F.DfgPath, "Input DFG file")->required();
    F.Target.add(Cmd, true);
    Cmd->add_option("--rulesets", F.Rulesets,
                    "Comma-separated rulesets (int, fp, bool, stochastic)");
    F.Limits.add(Cmd);
    Cmd->add_option("--dump-egraph", F.DumpEGraph,
                    "Write the saturated e-graph to this file");
    if (!Full)
      return;
    Cmd->add_option("--strategy", F.StrategyName,
                    "none, greedy, eqsat or hybrid")
        ->capture_default_str();
    Cmd->add_option("-o,--out", F.Out, "Rewritten DFG ('-' for stdout)")
        ->capture_default_str();
    Cmd->add_option("--mapping-out", F.MappingOut, "Write the mapping here");
    Cmd->add_flag("--strict", F.Strict,
                  "Exit with status 1 if the kernel does not compile");
  };
  CLI::App *Rewrite = App.add_subcommand("rewrite", "Rewrite one kernel");
  AddRewrite(Rewrite, RW, true);
  Rewrite->add_flag("--map", RW.Map, "Map the rewritten kernel");
  CLI::App *Compile =
      App.add_subcommand("compile", "Rewrite and map one kernel");
  AddRewrite(Compile, CF, true);
  CLI::App *Explain = App.add_subcommand(
      "explain", "Show the rule trace and e-graph statistics of a kernel");
  AddRewrite(Explain, EX, false);

  BenchFlags BF;
  CLI::App *Bench = App.add_subcommand("bench", "Run a kernel corpus");
  Bench->add_option("--corpus", BF.Corpus, "Directory of .dfg files")
      ->required();
  Bench->add_option("--arch-builtin", BF.Archs, "Bundled architectures")
      ->capture_default_str();
  Bench->add_option("--arch", BF.ArchFiles,
                    "Architecture files (overrides --arch-builtin)");
  Bench->add_option("--strategies", BF.Strategies, "Strategies to compare")
      ->capture_default_str();
  Bench->add_option("--rulesets", BF.Rulesets,
                    "Rulesets (default: per architecture)");
  Bench->add_option("--out", BF.Out, "Report directory")->capture_default_str();
  Bench->add_option("--threads", BF.Threads,
                    "Worker threads (default and cap: FLEXC_THREADS)");
  Bench->add_flag("--map", BF.Map, "Map compiled kernels");
  Bench->add_flag("--strict", BF.Strict,
                  "Exit with status 1 if any kernel fails");
  BF.Limits.add(Bench);

  CeilingFlags CE;
  CLI::App *Ceiling =
      App.add_subcommand("ceiling", "Estimate performance ceilings");
  Ceiling->add_option("--grammar", CE.Grammar, "Program grammar file");
  Ceiling->add_option("--grammar-ops", CE.GrammarOps,
                      "Grammar operations (overrides the file)");
  Ceiling->add_option("--max-ops", CE.MaxOps, "Operations per program");
  Ceiling->add_option("--inputs", CE.Inputs, "Inputs per program");
  Ceiling->add_option("--sample", CE.Sample,
                      "Sample this many programs instead of enumerating");
  Ceiling->add_option("--seed", CE.Seed, "Sampling seed")
      ->capture_default_str();
  Ceiling->add_option("--rulesets", CE.Rulesets, "Rulesets");
  Ceiling->add_option("--strategies", CE.Strategies,
                      "Heuristic rewriters to evaluate")
      ->capture_default_str();
  Ceiling->add_flag("--map", CE.Map, "Require a mapping for success");
  CE.Target.add(Ceiling, true);
  CE.Limits.add(Ceiling);

  try {
    App.parse(argc, argv);
  } catch (const CLI::ParseError &E) {
    int Code = App.exit(E);
    return Code == 0 ? 0 : 2;
  }

  try {
    if (*Rewrite)
      return runRewrite(RW, false);
    if (*Compile)
      return runRewrite(CF, true);
    if (*Explain)
      return runExplain(EX);
    if (*Bench)
      return runBench(BF);
    if (*Ceiling)
      return runCeiling(CE);
  } catch (const UsageError &E) {
    std::fprintf(stderr, "flexc: %s\n", E.what());
    return 2;
  } catch (const ParseError &E) {
    std::fprintf(stderr, "flexc: %s\n", E.what());
    return 2;
  } catch (const UnknownNameError &E) {
    std::fprintf(stderr, "flexc: %s\n", E.what());
    return 2;
  } catch (const std::exception &E) {
    std::fprintf(stderr, "flexc: %s\n", E.what());
    return 1;
  }
  return 0;
}
