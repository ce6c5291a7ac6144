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

//===- Extract.cpp - Tree-cost fixpoint plus exact shared-subterm search --===//

#include "flexc/Extract.h"
#include "flexc/Error.h"

#include <algorithm>
#include <cstring>

using namespace flexc;

static uint64_t satAdd(uint64_t A, uint64_t B) {
  if (A == InfiniteCost || B == InfiniteCost)
    return InfiniteCost;
  return A >= MaxFiniteCost - B ? MaxFiniteCost : A + B;
}

uint64_t flexc::enodeCost(const ENode &N, const OpSet &Ops) {
  if (isLeafOp(N.Op))
    return 0;
  return Ops.contains(N.Op) ? 1 : UnsupportedPenalty;
}

std::vector<uint64_t> flexc::treeCosts(const EGraph &G, const OpSet &Ops) {
  std::vector<uint64_t> Cost(G.idBound(), InfiniteCost);
  const std::vector<ClassId> Ids = G.classIds();
  for (bool Changed = true; Changed;) {
    Changed = false;
    for (ClassId C : Ids) {
      for (const ENode &N : G.eclass(C).Nodes) {
        uint64_t V = enodeCost(N, Ops);
        for (unsigned K = 0; K < N.NumKids && V != InfiniteCost; ++K)
          V = satAdd(V, Cost[G.find(N.Kids[K])]);
        if (V < Cost[C]) {
          Cost[C] = V;
          Changed = true;
        }
      }
    }
  }
  return Cost;
}

namespace {

/// Selection of one node index per canonical class; -1 means undecided.
using Choice = std::vector<int32_t>;

class Extractor {
public:
  Extractor(const EGraph &G, const OpSet &Ops) : G(G), Ops(Ops) {
    Tree = treeCosts(G, Ops);
  }

  const EGraph &G;
  const OpSet &Ops;
  std::vector<uint64_t> Tree;

  int carrySlot(const ENode &N) const {
    return N.Op == OpKind::Input ? G.carrySlotOf(N.Lit) : -1;
  }

  /// Same-iteration children.
  void edgeKids(const ENode &N, std::vector<ClassId> &Out) const {
    Out.clear();
    for (unsigned K = 0; K < N.NumKids; ++K) {
      ClassId C = G.find(N.Kids[K]);
      if (std::find(Out.begin(), Out.end(), C) == Out.end())
        Out.push_back(C);
    }
  }

  /// Classes that must also be extracted when N is selected.
  void requiredKids(const ENode &N, std::vector<ClassId> &Out) const {
    edgeKids(N, Out);
    if (int S = carrySlot(N); S >= 0) {
      ClassId P = G.find(G.carries()[S].Producer);
      if (std::find(Out.begin(), Out.end(), P) == Out.end())
        Out.push_back(P);
    }
  }

  bool usable(const ENode &N) const {
    for (unsigned K = 0; K < N.NumKids; ++K)
      if (Tree[G.find(N.Kids[K])] == InfiniteCost)
        return false;
    if (int S = carrySlot(N); S >= 0)
      return Tree[G.find(G.carries()[S].Producer)] != InfiniteCost;
    return true;
  }

  std::vector<ClassId> roots() const {
    std::vector<ClassId> R;
    for (ClassId C : G.Roots)
      R.push_back(G.find(C));
    return R;
  }

  Choice treeSelection() const {
    Choice Sel(G.idBound(), -1);
    for (ClassId C : G.classIds()) {
      const auto &Nodes = G.eclass(C).Nodes;
      for (size_t I = 0; I < Nodes.size(); ++I) {
        uint64_t V = enodeCost(Nodes[I], Ops);
        for (unsigned K = 0; K < Nodes[I].NumKids && V != InfiniteCost; ++K)
          V = satAdd(V, Tree[G.find(Nodes[I].Kids[K])]);
        if (V == Tree[C] && V != InfiniteCost) {
          Sel[C] = static_cast<int32_t>(I);
          break;
        }
      }
    }
    return Sel;
  }

  /// Picks, per class, a node whose children were all reachable in an
  /// earlier bottom-up round. Acyclic even when tree costs saturate.
  Choice levelSelection() const {
    Choice Sel(G.idBound(), -1);
    std::vector<uint32_t> Level(G.idBound(), UINT32_MAX);
    const std::vector<ClassId> Ids = G.classIds();
    std::vector<ClassId> Kids;
    for (uint32_t Round = 0;; ++Round) {
      std::vector<std::pair<ClassId, int32_t>> Reached;
      for (ClassId C : Ids) {
        if (Level[C] != UINT32_MAX)
          continue;
        const auto &Nodes = G.eclass(C).Nodes;
        for (size_t I = 0; I < Nodes.size(); ++I) {
          if (!usable(Nodes[I]))
            continue;
          edgeKids(Nodes[I], Kids);
          if (std::all_of(Kids.begin(), Kids.end(),
                          [&](ClassId K) { return Level[K] < Round; })) {
            Reached.push_back({C, static_cast<int32_t>(I)});
            break;
          }
        }
      }
      if (Reached.empty())
        return Sel;
      for (auto [C, I] : Reached) {
        Level[C] = Round;
        Sel[C] = I;
      }
    }
  }

  Choice originSelection() const {
    Choice Sel(G.idBound(), -1);
    for (const auto &[Cls, Node] : G.Origins) {
      ClassId C = G.find(Cls);
      if (Sel[C] >= 0)
        continue;
      ENode N = G.canonicalize(Node);
      const auto &Nodes = G.eclass(C).Nodes;
      auto It = std::lower_bound(Nodes.begin(), Nodes.end(), N);
      if (It != Nodes.end() && *It == N && usable(*It))
        Sel[C] = static_cast<int32_t>(It - Nodes.begin());
    }
    return Sel;
  }

  /// Shared cost of a complete selection, InfiniteCost if it is incomplete
  /// or has a same-iteration cycle.
  uint64_t dagCost(const Choice &Sel) const {
    std::vector<uint8_t> State(G.idBound(), 0);
    uint64_t Total = 0;
    std::vector<ClassId> Kids;
    std::vector<std::pair<ClassId, bool>> Stack;
    for (ClassId R : roots())
      Stack.push_back({R, false});
    // Required-but-unvisited carry producers are pushed as fresh roots.
    while (!Stack.empty()) {
      auto [C, Done] = Stack.back();
      Stack.pop_back();
      if (Done) {
        State[C] = 2;
        continue;
      }
      if (State[C] == 2)
        continue;
      if (State[C] == 1)
        return InfiniteCost;
      if (Sel[C] < 0)
        return InfiniteCost;
      const ENode &N = G.eclass(C).Nodes[Sel[C]];
      Total = satAdd(Total, enodeCost(N, Ops));
      State[C] = 1;
      Stack.push_back({C, true});
      edgeKids(N, Kids);
      for (ClassId K : Kids)
        if (State[K] != 2)
          Stack.push_back({K, false});
      if (int S = carrySlot(N); S >= 0) {
        ClassId P = G.find(G.carries()[S].Producer);
        if (!State[P])
          Stack.insert(Stack.begin(), {P, false});
      }
    }
    return Total;
  }

  //===--------------------------------------------------------------------===//
  // Branch and bound over class choices.
  //===--------------------------------------------------------------------===//

  Choice Cur, Best;
  uint64_t BestCost = InfiniteCost;
  std::vector<uint32_t> ReqCount;
  std::vector<ClassId> Agenda;
  std::vector<uint64_t> MinOp;
  std::vector<uint32_t> Stamp;
  uint32_t StampGen = 0;
  uint64_t LB = 0, Steps = 0, Budget = 0;
  bool Aborted = false;

  bool reaches(ClassId From, ClassId Target) {
    ++StampGen;
    std::vector<ClassId> Work{From}, Kids;
    while (!Work.empty()) {
      ClassId C = Work.back();
      Work.pop_back();
      if (C == Target)
        return true;
      if (Stamp[C] == StampGen || Cur[C] < 0)
        continue;
      Stamp[C] = StampGen;
      edgeKids(G.eclass(C).Nodes[Cur[C]], Kids);
      Work.insert(Work.end(), Kids.begin(), Kids.end());
    }
    return false;
  }

  void solve(uint64_t Cost) {
    if (Aborted)
      return;
    if (++Steps > Budget) {
      Aborted = true;
      return;
    }
    if (satAdd(Cost, LB) >= BestCost)
      return;
    if (Agenda.empty()) {
      BestCost = Cost;
      Best = Cur;
      return;
    }
    ClassId C = Agenda.back();
    Agenda.pop_back();
    LB -= MinOp[C];

    const auto &Nodes = G.eclass(C).Nodes;
    struct Cand {
      uint64_t Key;
      int32_t Idx;
    };
    std::vector<Cand> Cands;
    std::vector<ClassId> Kids;
    for (size_t I = 0; I < Nodes.size(); ++I) {
      if (!usable(Nodes[I]))
        continue;
      uint64_t Key = enodeCost(Nodes[I], Ops);
      requiredKids(Nodes[I], Kids);
      for (ClassId K : Kids)
        if (Cur[K] < 0 && ReqCount[K] == 0)
          Key = satAdd(Key, MinOp[K]);
      Cands.push_back({Key, static_cast<int32_t>(I)});
    }
    std::stable_sort(Cands.begin(), Cands.end(),
                     [](const Cand &A, const Cand &B) { return A.Key < B.Key; });

    for (const Cand &Cd : Cands) {
      if (Aborted || satAdd(satAdd(Cost, LB), Cd.Key) >= BestCost)
        break;
      const ENode &N = Nodes[Cd.Idx];
      edgeKids(N, Kids);
      bool Cycle = false;
      for (ClassId K : Kids)
        if (reaches(K, C)) {
          Cycle = true;
          break;
        }
      if (Cycle)
        continue;
      Cur[C] = Cd.Idx;
      requiredKids(N, Kids);
      size_t Pushed = 0;
      for (ClassId K : Kids) {
        if (ReqCount[K]++ == 0 && Cur[K] < 0) {
          Agenda.push_back(K);
          LB += MinOp[K];
          ++Pushed;
        }
      }
      solve(Cost + enodeCost(N, Ops));
      for (size_t P = 0; P < Pushed; ++P) {
        LB -= MinOp[Agenda.back()];
        Agenda.pop_back();
      }
      for (ClassId K : Kids)
        --ReqCount[K];
      Cur[C] = -1;
    }
    Agenda.push_back(C);
    LB += MinOp[C];
  }

  bool search(uint64_t StepBudget) {
    const size_t N = G.idBound();
    Cur.assign(N, -1);
    ReqCount.assign(N, 0);
    Stamp.assign(N, 0);
    MinOp.assign(N, InfiniteCost);
    for (ClassId C : G.classIds())
      for (const ENode &E : G.eclass(C).Nodes)
        if (usable(E))
          MinOp[C] = std::min(MinOp[C], enodeCost(E, Ops));
    Agenda.clear();
    LB = 0;
    for (ClassId R : roots())
      if (ReqCount[R]++ == 0) {
        Agenda.push_back(R);
        LB = satAdd(LB, MinOp[R]);
      }
    // Visit roots in their listed order.
    std::reverse(Agenda.begin(), Agenda.end());
    Budget = StepBudget;
    solve(0);
    return !Aborted;
  }

  //===--------------------------------------------------------------------===//
  // Dfg construction.
  //===--------------------------------------------------------------------===//

  /// Follows carry leaves to a materialized producer class.
  std::pair<ClassId, uint32_t> resolve(ClassId C, const Choice &Sel) const {
    uint32_t Dist = 0;
    for (size_t Guard = 0; Guard <= G.carries().size(); ++Guard) {
      const ENode &N = G.eclass(C).Nodes[Sel[C]];
      int S = carrySlot(N);
      if (S < 0)
        return {C, Dist};
      Dist += G.carries()[S].Distance;
      C = G.find(G.carries()[S].Producer);
    }
    throw ExtractionError("loop-carried value has no producing operation");
  }

  Dfg build(const Choice &Sel) const {
    std::vector<int64_t> Index(G.idBound(), -1);
    std::vector<ClassId> Order;
    std::vector<uint8_t> State(G.idBound(), 0);
    std::vector<ClassId> Pending = roots(), Kids;
    std::reverse(Pending.begin(), Pending.end());
    while (!Pending.empty()) {
      ClassId Root = Pending.back();
      Pending.pop_back();
      Root = resolve(Root, Sel).first;
      if (State[Root])
        continue;
      std::vector<std::pair<ClassId, bool>> Stack{{Root, false}};
      while (!Stack.empty()) {
        auto [C, Done] = Stack.back();
        Stack.pop_back();
        if (Done) {
          State[C] = 2;
          Index[C] = static_cast<int64_t>(Order.size());
          Order.push_back(C);
          continue;
        }
        if (State[C])
          continue;
        const ENode &N = G.eclass(C).Nodes[Sel[C]];
        if (carrySlot(N) >= 0) {
          State[C] = 2;
          Pending.push_back(G.find(G.carries()[carrySlot(N)].Producer));
          continue;
        }
        State[C] = 1;
        Stack.push_back({C, true});
        edgeKids(N, Kids);
        for (auto It = Kids.rbegin(); It != Kids.rend(); ++It)
          if (!State[*It])
            Stack.push_back({*It, false});
      }
    }

    Dfg D;
    for (ClassId C : Order) {
      const ENode &E = G.eclass(C).Nodes[Sel[C]];
      Node N;
      N.Label = "n" + std::to_string(D.Nodes.size());
      N.Op = E.Op;
      if (E.Op == OpKind::Const)
        N.Imm = static_cast<int32_t>(E.Lit);
      else if (E.Op == OpKind::FConst)
        std::memcpy(&N.FImm, &E.Lit, sizeof(double));
      else if (E.Op == OpKind::Input)
        N.Name = G.symbol(E.Lit);
      for (unsigned K = 0; K < E.NumKids; ++K) {
        auto [P, Dist] = resolve(G.find(E.Kids[K]), Sel);
        N.Operands.push_back({static_cast<uint32_t>(Index[P]), Dist});
      }
      D.Nodes.push_back(std::move(N));
    }
    for (ClassId R : roots()) {
      auto [P, Dist] = resolve(R, Sel);
      if (Dist)
        throw ExtractionError("output is a value from a previous iteration");
      D.Outputs.push_back(static_cast<uint32_t>(Index[P]));
    }
    return D;
  }
};

} // namespace

ExtractResult flexc::extractBest(const EGraph &G, const OpSet &Ops,
                                 const ExtractOptions &Opts) {
  if (!G.isClean())
    throw ExtractionError("extraction requires a rebuilt e-graph");
  Extractor X(G, Ops);
  ExtractResult R;
  for (ClassId Root : X.roots()) {
    if (X.Tree[Root] == InfiniteCost)
      throw ExtractionError("no finite-cost term for an output class");
    R.TreeCost = satAdd(R.TreeCost, X.Tree[Root]);
  }

  Choice TreeSel = X.treeSelection();
  X.Best = TreeSel;
  X.BestCost = X.dagCost(TreeSel);
  if (Opts.UseOrigins) {
    Choice Orig = X.originSelection();
    uint64_t C = X.dagCost(Orig);
    if (C < X.BestCost) {
      X.BestCost = C;
      X.Best = std::move(Orig);
    }
  }
  if (X.BestCost == InfiniteCost) {
    Choice Level = X.levelSelection();
    X.BestCost = X.dagCost(Level);
    X.Best = std::move(Level);
  }
  if (X.BestCost == InfiniteCost)
    throw ExtractionError("no acyclic selection reaches every output");
  R.DagExact = X.search(Opts.DagSearchSteps);
  R.Program = X.build(X.Best);
  R.DagCost = cost(R.Program, Ops);
  return R;
}
