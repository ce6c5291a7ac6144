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

//===- Ceiling.cpp - Performance ceiling estimation -----------------------===//

#include "flexc/Ceiling.h"
#include "flexc/Error.h"
#include "flexc/Matcher.h"
#include "flexc/Parallel.h"

#include <atomic>
#include <limits>
#include <unordered_set>

using namespace flexc;

std::string_view flexc::optimalStatusName(OptimalStatus S) {
  switch (S) {
  case OptimalStatus::Found:
    return "found";
  case OptimalStatus::Unreachable:
    return "unreachable";
  case OptimalStatus::BudgetExceeded:
    return "budget_exceeded";
  }
  return "?";
}

OptimalRewriteResult flexc::optimalRewrite(const Dfg &D,
                                           const std::vector<RewriteRule> &Rules,
                                           const OpSet &Ops,
                                           const OptimalRewriteLimits &Lim) {
  if (D.numOps() > Lim.MaxOps)
    throw Error("optimal rewriting is limited to " +
                std::to_string(Lim.MaxOps) + " operations");
  OptimalRewriteResult R;
  auto Found = [&](const Dfg &P, unsigned Depth) {
    R.Status = OptimalStatus::Found;
    R.Program = P;
    R.Depth = Depth;
    return R;
  };
  if (cost(D, Ops) < UnsupportedPenalty)
    return Found(D, 0);

  std::unordered_set<std::string> Seen{structuralKey(D)};
  std::vector<Dfg> Frontier{D};
  bool Truncated = false;
  for (unsigned Depth = 1; Depth <= Lim.Depth && !Frontier.empty() &&
                           !Truncated;
       ++Depth) {
    std::vector<Dfg> Next;
    for (const Dfg &State : Frontier) {
      for (const RewriteRule &Rule : Rules) {
        for (const Match &M : findMatches(State, Rule)) {
          Dfg Child = applyMatch(State, M, Rule);
          if (!Seen.insert(structuralKey(Child)).second)
            continue;
          R.StatesExplored = Seen.size();
          if (cost(Child, Ops) < UnsupportedPenalty)
            return Found(Child, Depth);
          if (Seen.size() >= Lim.MaxStates) {
            Truncated = true;
            break;
          }
          Next.push_back(std::move(Child));
        }
        if (Truncated)
          break;
      }
      if (Truncated)
        break;
    }
    Frontier = std::move(Next);
  }

  EqsatResult E = eqsatRewrite(D, Rules, Ops, Lim.Saturation);
  if (E.Cost < UnsupportedPenalty) {
    R.Status = OptimalStatus::Found;
    R.Program = std::move(E.Result);
    R.FoundBySaturation = true;
    return R;
  }
  R.Status = E.Report.Stop == StopReason::Saturated
                 ? OptimalStatus::Unreachable
                 : OptimalStatus::BudgetExceeded;
  return R;
}

std::string_view flexc::rewriterKindName(RewriterKind K) {
  switch (K) {
  case RewriterKind::None:
    return "none";
  case RewriterKind::Greedy:
    return "greedy";
  case RewriterKind::Eqsat:
    return "eqsat";
  case RewriterKind::Hybrid:
    return "hybrid";
  case RewriterKind::Optimal:
    return "optimal";
  }
  return "?";
}

RewriterKind flexc::rewriterKindFromName(std::string_view Name) {
  for (RewriterKind K : {RewriterKind::None, RewriterKind::Greedy,
                         RewriterKind::Eqsat, RewriterKind::Hybrid,
                         RewriterKind::Optimal})
    if (rewriterKindName(K) == Name)
      return K;
  throw UnknownNameError("unknown rewriter '" + std::string(Name) + "'");
}

static Strategy strategyOf(RewriterKind K) {
  switch (K) {
  case RewriterKind::None:
    return Strategy::None;
  case RewriterKind::Greedy:
    return Strategy::Greedy;
  case RewriterKind::Eqsat:
    return Strategy::Eqsat;
  default:
    return Strategy::Hybrid;
  }
}

CompileAttempt flexc::runCompiler(const CompilerUnderTest &C, const Dfg &D,
                                  const std::vector<RewriteRule> &Rules,
                                  const CgraSpec &S) {
  CompileAttempt A;
  OpSet Ops = supportedOps(S);
  Dfg Rewritten;
  if (C.Rewriter == RewriterKind::Optimal) {
    OptimalRewriteResult O = optimalRewrite(D, Rules, Ops, C.Optimal);
    if (O.Status == OptimalStatus::BudgetExceeded) {
      A.BudgetExceeded = true;
      return A;
    }
    Rewritten = O.Program ? *O.Program : D;
  } else {
    Rewritten = rewriteWith(strategyOf(C.Rewriter), D, Rules, Ops, C.Limits)
                    .Result;
  }
  A.Cost = cost(Rewritten, Ops);
  if (A.Cost >= UnsupportedPenalty || C.Mapper == MapperKind::Off) {
    A.Success = A.Cost < UnsupportedPenalty;
    return A;
  }

  MapBudget Budget = C.Mapping;
  if (C.Mapper == MapperKind::Optimal) {
    if (Rewritten.numOps() > C.OptimalMapperMaxOps)
      throw Error("optimal mapping is limited to " +
                  std::to_string(C.OptimalMapperMaxOps) + " operations");
    Budget.Steps = std::numeric_limits<uint64_t>::max();
    Budget.Seconds = 1e8;
  }
  CompileResult M = compile(Rewritten, S, Budget);
  if (M.Map) {
    A.Success = true;
    A.Ii = M.Ii;
  } else if (C.Mapper == MapperKind::Optimal) {
    A.BudgetExceeded = M.LastStatus == MapStatus::BudgetExhausted;
  }
  return A;
}

double flexc::suppFraction(const std::vector<Dfg> &Programs,
                           const std::vector<RewriteRule> &Rules,
                           const CompilerUnderTest &C, const CgraSpec &S,
                           unsigned Threads) {
  if (Programs.empty())
    throw Error("program list is empty");
  std::atomic<size_t> Successes{0};
  parallelFor(Programs.size(), Threads, [&](size_t I) {
    if (runCompiler(C, Programs[I], Rules, S).Success)
      ++Successes;
  });
  return double(Successes) / double(Programs.size());
}

CeilingReport flexc::ceilingEstimate(const std::vector<Dfg> &Programs,
                                     const std::vector<RewriteRule> &Rules,
                                     const CompilerUnderTest &Heuristic,
                                     const CgraSpec &S,
                                     std::optional<CompilerUnderTest> Optimal,
                                     unsigned Threads) {
  if (!Optimal) {
    Optimal = Heuristic;
    Optimal->Rewriter = RewriterKind::Optimal;
    if (Heuristic.Mapper != MapperKind::Off)
      Optimal->Mapper = MapperKind::Optimal;
  }
  std::vector<CompileAttempt> Opt(Programs.size()), Heur(Programs.size());
  parallelFor(Programs.size(), Threads, [&](size_t I) {
    Opt[I] = runCompiler(*Optimal, Programs[I], Rules, S);
    if (!Opt[I].BudgetExceeded)
      Heur[I] = runCompiler(Heuristic, Programs[I], Rules, S);
  });

  CeilingReport R;
  for (size_t I = 0; I < Programs.size(); ++I) {
    if (Opt[I].BudgetExceeded) {
      R.Excluded.push_back(I);
      continue;
    }
    ++R.Counted;
    R.OptimalSuccesses += Opt[I].Success;
    R.HeuristicSuccesses += Heur[I].Success;
    if (Opt[I].Success && !Heur[I].Success)
      R.Misses.push_back(I);
  }
  if (R.Counted)
    R.Estimate = double(R.Counted - R.Misses.size()) / double(R.Counted);
  return R;
}
