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

//===- Mapper.cpp - Modulo scheduling onto a CGRA -------------------------===//
//
// mapAt places operations in topological order. A node without incoming
// edges from later nodes never benefits from being delayed by a full II, so
// its slot is tried only in [earliest, earliest + II). Recurrence heads may
// be delayed up to a bound on the least schedule, which keeps the search
// complete for a fixed II.
//
//===----------------------------------------------------------------------===//

#include "flexc/Mapper.h"
#include "flexc/Error.h"

#include "Deadline.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <limits>
#include <map>

using namespace flexc;
using Clock = std::chrono::steady_clock;

static constexpr unsigned NoPath = std::numeric_limits<unsigned>::max();

unsigned Mapping::scheduleLength() const {
  unsigned Len = 0;
  for (const auto &P : Places)
    if (P)
      Len = std::max(Len, P->Slot + 1);
  return Len;
}

std::string_view flexc::mapStatusName(MapStatus S) {
  switch (S) {
  case MapStatus::Success:
    return "success";
  case MapStatus::Infeasible:
    return "infeasible";
  case MapStatus::BudgetExhausted:
    return "budget_exhausted";
  }
  return "?";
}

unsigned flexc::resMii(const Dfg &D, const CgraSpec &S) {
  std::map<OpKind, unsigned> Count;
  for (const Node &N : D.Nodes)
    if (!isLeafOp(N.Op))
      ++Count[N.Op];
  unsigned Mii = 1;
  for (auto [K, C] : Count) {
    unsigned Pes = 0;
    for (const ProcessingElement &P : S.Pes)
      Pes += P.Supported.contains(K);
    if (!Pes)
      throw UnsupportedOpError("no PE of '" + S.Name + "' supports '" +
                               std::string(opName(K)) + "'");
    Mii = std::max(Mii, (C + Pes - 1) / Pes);
  }
  return Mii;
}

namespace {

struct DepEdge {
  uint32_t From, To, Operand, Distance;
};

std::vector<DepEdge> opEdges(const Dfg &D) {
  std::vector<DepEdge> Edges;
  for (uint32_t C = 0; C < D.size(); ++C) {
    if (isLeafOp(D.Nodes[C].Op))
      continue;
    const auto &Ops = D.Nodes[C].Operands;
    for (uint32_t J = 0; J < Ops.size(); ++J)
      if (!isLeafOp(D.Nodes[Ops[J].Node].Op))
        Edges.push_back({Ops[J].Node, C, J, Ops[J].Distance});
  }
  return Edges;
}

// True if the unit-latency dependence graph has a positive cycle at \p Ii.
bool hasPositiveCycle(size_t N, const std::vector<DepEdge> &Edges,
                      unsigned Ii) {
  std::vector<int64_t> Dist(N, 0);
  for (size_t Round = 0; Round <= N; ++Round) {
    bool Changed = false;
    for (const DepEdge &E : Edges) {
      int64_t W = 1 - int64_t(E.Distance) * Ii;
      if (Dist[E.From] + W > Dist[E.To]) {
        Dist[E.To] = Dist[E.From] + W;
        Changed = true;
      }
    }
    if (!Changed)
      return false;
  }
  return true;
}

} // namespace

unsigned flexc::recMii(const Dfg &D) {
  std::vector<DepEdge> Edges = opEdges(D);
  for (const DepEdge &E : Edges)
    if (E.Distance == 0 && E.From >= E.To)
      throw InvalidGraphError("dependence cycle without a carried edge");
  unsigned Ops = std::max<size_t>(1, D.numOps());
  for (unsigned Ii = 1; Ii <= Ops; ++Ii)
    if (!hasPositiveCycle(D.size(), Edges, Ii))
      return Ii;
  throw InvalidGraphError("dependence cycle without a carried edge");
}

namespace {

using PeMask = uint64_t;

class Scheduler {
public:
  Scheduler(const Dfg &D, const CgraSpec &S, unsigned Ii,
            const MapBudget &Budget);
  MapResult run();

private:
  bool place(size_t Idx);
  bool hopsFeasible(unsigned From, unsigned To, int64_t Hops) const;
  bool slotFeasible(uint32_t V, unsigned Pe, int64_t T) const;
  bool remainingFits(size_t Idx);
  std::vector<Placement> route(unsigned From, unsigned To,
                               unsigned Hops) const;
  Mapping build() const;

  const Dfg &D;
  const CgraSpec &S;
  unsigned Ii;
  MapBudget Budget;
  Clock::time_point Deadline;
  uint64_t Steps = 0;
  bool OutOfBudget = false;

  unsigned NumPes;
  std::vector<PeMask> Succ; // Out-neighbours plus the PE itself.
  PeMask Reg = 0;
  // Reach[P][m]: PEs that can consume a value from P after exactly m hops.
  std::vector<std::vector<PeMask>> Reach;
  std::vector<std::vector<unsigned>> MinHops;
  unsigned MaxHops = 0;

  std::vector<uint32_t> Order;
  std::vector<int> Pos;
  std::vector<PeMask> Capable;
  std::vector<std::vector<DepEdge>> In, Out;
  std::vector<bool> Head;
  int64_t LatestHead = 0;

  std::vector<int64_t> Slot;
  std::vector<unsigned> PeOf;
  std::vector<char> Busy; // [pe * Ii + residue]
};

Scheduler::Scheduler(const Dfg &D, const CgraSpec &S, unsigned Ii,
                     const MapBudget &Budget)
    : D(D), S(S), Ii(Ii), Budget(Budget), NumPes(S.Pes.size()) {
  if (NumPes > 64)
    throw Error("the mapper supports at most 64 PEs");
  Succ.assign(NumPes, 0);
  for (unsigned P = 0; P < NumPes; ++P) {
    Succ[P] |= PeMask(1) << P;
    if (S.Pes[P].HasRegister)
      Reg |= PeMask(1) << P;
  }
  for (auto [A, B] : S.Links)
    Succ[A] |= PeMask(1) << B;

  auto Expand = [&](PeMask X) {
    PeMask R = 0;
    for (; X; X &= X - 1)
      R |= Succ[std::countr_zero(X)];
    return R;
  };
  Reach.assign(NumPes, {});
  MinHops.assign(NumPes, std::vector<unsigned>(NumPes, NoPath));
  for (unsigned P = 0; P < NumPes; ++P) {
    PeMask Held = Succ[P] & Reg;
    Reach[P].push_back(Succ[P]);
    for (unsigned M = 1; M <= NumPes; ++M) {
      Reach[P].push_back(Expand(Held));
      Held = Reach[P].back() & Reg;
    }
    for (unsigned M = 0; M <= NumPes; ++M)
      for (unsigned C = 0; C < NumPes; ++C)
        if ((Reach[P][M] >> C & 1) && MinHops[P][C] == NoPath) {
          MinHops[P][C] = M;
          MaxHops = std::max(MaxHops, M);
        }
  }

  Pos.assign(D.size(), -1);
  for (uint32_t V = 0; V < D.size(); ++V)
    if (!isLeafOp(D.Nodes[V].Op)) {
      Pos[V] = Order.size();
      Order.push_back(V);
    }
  Capable.assign(D.size(), 0);
  for (uint32_t V : Order)
    for (unsigned P = 0; P < NumPes; ++P)
      if (S.Pes[P].Supported.contains(D.Nodes[V].Op))
        Capable[V] |= PeMask(1) << P;
  In.assign(D.size(), {});
  Out.assign(D.size(), {});
  Head.assign(D.size(), false);
  for (const DepEdge &E : opEdges(D)) {
    In[E.To].push_back(E);
    Out[E.From].push_back(E);
    if (Pos[E.From] > Pos[E.To])
      Head[E.To] = true;
  }
  // Every node of the least schedule for fixed PEs and residues has an
  // iteration index bounded by a simple longest path.
  int64_t N = Order.size();
  int64_t Step = 1 + (MaxHops + Ii - 1) / Ii;
  LatestHead = int64_t(Ii) - 1 + int64_t(Ii) * std::max<int64_t>(0, N - 1) *
                                    Step;

  Slot.assign(D.size(), -1);
  PeOf.assign(D.size(), 0);
  Busy.assign(size_t(NumPes) * Ii, 0);
}

bool Scheduler::hopsFeasible(unsigned From, unsigned To, int64_t Hops) const {
  if (Hops < 0)
    return false;
  return Reach[From][std::min<int64_t>(Hops, NumPes)] >> To & 1;
}

bool Scheduler::slotFeasible(uint32_t V, unsigned Pe, int64_t T) const {
  if (Busy[size_t(Pe) * Ii + T % Ii])
    return false;
  for (const DepEdge &E : In[V]) {
    if (E.From == V || Slot[E.From] < 0)
      continue;
    int64_t Hops = T + int64_t(E.Distance) * Ii - Slot[E.From] - 1;
    if (!hopsFeasible(PeOf[E.From], Pe, Hops))
      return false;
  }
  for (const DepEdge &E : Out[V]) {
    int64_t Hops;
    if (E.To == V)
      Hops = int64_t(E.Distance) * Ii - 1;
    else if (Slot[E.To] >= 0)
      Hops = Slot[E.To] + int64_t(E.Distance) * Ii - T - 1;
    else
      continue;
    if (!hopsFeasible(Pe, E.To == V ? Pe : PeOf[E.To], Hops))
      return false;
  }
  return true;
}

// Matches the unplaced nodes to free (PE, residue) cells.
bool Scheduler::remainingFits(size_t Idx) {
  std::vector<unsigned> Free(NumPes, 0);
  for (unsigned P = 0; P < NumPes; ++P)
    for (unsigned R = 0; R < Ii; ++R)
      Free[P] += !Busy[size_t(P) * Ii + R];
  // Kuhn's augmenting paths with PE capacities.
  std::vector<std::vector<uint32_t>> Assigned(NumPes);
  std::vector<char> Visited;
  std::function<bool(uint32_t)> Augment = [&](uint32_t V) {
    for (PeMask M = Capable[V]; M; M &= M - 1) {
      unsigned P = std::countr_zero(M);
      if (Visited[P])
        continue;
      Visited[P] = 1;
      if (Assigned[P].size() < Free[P]) {
        Assigned[P].push_back(V);
        return true;
      }
      for (uint32_t &W : Assigned[P])
        if (Augment(W)) {
          W = V;
          return true;
        }
    }
    return false;
  };
  for (size_t I = Idx; I < Order.size(); ++I) {
    Visited.assign(NumPes, 0);
    if (!Augment(Order[I]))
      return false;
  }
  return true;
}

bool Scheduler::place(size_t Idx) {
  if (Idx == Order.size())
    return true;
  uint32_t V = Order[Idx];

  struct Candidate {
    uint64_t Score;
    unsigned Pe;
    int64_t Earliest, Latest;
  };
  std::vector<Candidate> Cands;
  for (PeMask M = Capable[V]; M; M &= M - 1) {
    unsigned Pe = std::countr_zero(M);
    Candidate C{0, Pe, 0, std::numeric_limits<int64_t>::max()};
    bool Ok = true;
    for (const DepEdge &E : In[V]) {
      if (E.From == V || Slot[E.From] < 0)
        continue;
      unsigned H = MinHops[PeOf[E.From]][Pe];
      if (H == NoPath) {
        Ok = false;
        break;
      }
      C.Score += H;
      C.Earliest = std::max(C.Earliest, Slot[E.From] + 1 + int64_t(H) -
                                            int64_t(E.Distance) * Ii);
    }
    for (const DepEdge &E : Out[V]) {
      if (!Ok || E.To == V || Slot[E.To] < 0)
        continue;
      unsigned H = MinHops[Pe][PeOf[E.To]];
      if (H == NoPath) {
        Ok = false;
        break;
      }
      C.Score += H;
      C.Latest = std::min(C.Latest, Slot[E.To] + int64_t(E.Distance) * Ii -
                                        1 - int64_t(H));
    }
    if (!Ok)
      continue;
    C.Latest = std::min(C.Latest, Head[V] ? LatestHead
                                          : C.Earliest + int64_t(Ii) - 1);
    if (C.Earliest <= C.Latest)
      Cands.push_back(C);
  }
  std::stable_sort(Cands.begin(), Cands.end(),
                   [](const Candidate &A, const Candidate &B) {
                     return A.Score < B.Score;
                   });

  for (const Candidate &C : Cands) {
    for (int64_t T = C.Earliest; T <= C.Latest; ++T) {
      if (++Steps > Budget.Steps ||
          ((Steps & 1023) == 0 && Clock::now() > Deadline)) {
        OutOfBudget = true;
        return false;
      }
      if (!slotFeasible(V, C.Pe, T))
        continue;
      char &Cell = Busy[size_t(C.Pe) * Ii + T % Ii];
      Cell = 1;
      Slot[V] = T;
      PeOf[V] = C.Pe;
      if (remainingFits(Idx + 1) && place(Idx + 1))
        return true;
      Cell = 0;
      Slot[V] = -1;
      if (OutOfBudget)
        return false;
    }
  }
  return false;
}

std::vector<Placement> Scheduler::route(unsigned From, unsigned To,
                                        unsigned Hops) const {
  std::vector<PeMask> Held(Hops + 1, 0);
  if (Hops)
    Held[1] = Succ[From] & Reg;
  for (unsigned J = 2; J <= Hops; ++J) {
    PeMask R = 0;
    for (PeMask X = Held[J - 1]; X; X &= X - 1)
      R |= Succ[std::countr_zero(X)];
    Held[J] = R & Reg;
  }
  std::vector<Placement> Path(Hops);
  unsigned Next = To;
  for (unsigned J = Hops; J >= 1; --J) {
    PeMask Options = 0;
    for (PeMask X = Held[J]; X; X &= X - 1) {
      unsigned P = std::countr_zero(X);
      if (Succ[P] >> Next & 1)
        Options |= PeMask(1) << P;
    }
    Next = std::countr_zero(Options);
    Path[J - 1].Pe = Next;
  }
  return Path;
}

Mapping Scheduler::build() const {
  Mapping M;
  M.Ii = Ii;
  M.Places.assign(D.size(), std::nullopt);
  for (uint32_t V : Order)
    M.Places[V] = Placement{PeOf[V], unsigned(Slot[V])};
  for (uint32_t V : Order)
    for (const DepEdge &E : In[V]) {
      int64_t Hops =
          Slot[V] + int64_t(E.Distance) * Ii - Slot[E.From] - 1;
      std::vector<Placement> Path = route(PeOf[E.From], PeOf[V], Hops);
      for (unsigned J = 0; J < Path.size(); ++J)
        Path[J].Slot = Slot[E.From] + 1 + J;
      M.Routes[{E.To, E.Operand}] = std::move(Path);
    }
  return M;
}

MapResult Scheduler::run() {
  MapResult R;
  Deadline = deadlineAfter(Budget.Seconds);
  bool Found = remainingFits(0) && place(0);
  R.Steps = Steps;
  if (Found) {
    R.Status = MapStatus::Success;
    R.Map = build();
  } else {
    // Without registers everywhere a longer route can fail where a shorter
    // one succeeds, and the slot windows above no longer cover every case.
    PeMask All = NumPes == 64 ? ~PeMask(0) : (PeMask(1) << NumPes) - 1;
    bool Complete = !OutOfBudget && Reg == All;
    R.Status = Complete ? MapStatus::Infeasible : MapStatus::BudgetExhausted;
  }
  return R;
}

} // namespace

MapResult flexc::mapAt(const Dfg &D, const CgraSpec &S, unsigned Ii,
                       const MapBudget &Budget) {
  if (Ii == 0)
    throw Error("II must be positive");
  return Scheduler(D, S, Ii, Budget).run();
}

CompileResult flexc::compile(const Dfg &D, const CgraSpec &S,
                             const MapBudget &PerIi) {
  CompileResult R;
  R.ResMii = resMii(D, S);
  R.RecMii = recMii(D);
  unsigned Lower = std::max({R.ResMii, R.RecMii, 1u});
  R.Ii = Lower;
  if (D.numOps() == 0) {
    Mapping M;
    M.Places.assign(D.size(), std::nullopt);
    R.Map = std::move(M);
    return R;
  }

  // At this II every operation fits in its own slot with room for any route.
  unsigned Diameter = 0;
  for (unsigned A = 0; A < S.Pes.size(); ++A) {
    std::vector<unsigned> Dist(S.Pes.size(), NoPath);
    std::vector<unsigned> Queue{A};
    Dist[A] = 0;
    for (size_t I = 0; I < Queue.size(); ++I)
      for (auto [From, To] : S.Links)
        if (From == Queue[I] && Dist[To] == NoPath) {
          Dist[To] = Dist[From] + 1;
          Queue.push_back(To);
        }
    for (unsigned X : Dist)
      if (X != NoPath)
        Diameter = std::max(Diameter, X);
  }
  unsigned Cap = Lower + unsigned(D.numOps()) * (Diameter + 1);

  for (unsigned Ii = Lower; Ii <= Cap; ++Ii) {
    MapResult M = mapAt(D, S, Ii, PerIi);
    R.Ii = Ii;
    R.LastStatus = M.Status;
    if (M.Map) {
      R.Map = std::move(M.Map);
      return R;
    }
  }
  return R;
}

uint64_t flexc::estimateCycles(const Mapping &M, uint64_t Iterations) {
  if (Iterations == 0)
    throw Error("iteration count must be positive");
  return M.scheduleLength() + (Iterations - 1) * uint64_t(M.Ii);
}

std::string flexc::printMapping(const Dfg &D, const CgraSpec &S,
                                const Mapping &M) {
  std::string Out = "ii " + std::to_string(M.Ii) + "\n";
  for (uint32_t V = 0; V < M.Places.size(); ++V) {
    if (!M.Places[V])
      continue;
    const Placement &P = *M.Places[V];
    const ProcessingElement &Pe = S.Pes[P.Pe];
    Out += "node " + D.Nodes[V].Label + " " +
           std::string(opName(D.Nodes[V].Op)) + " pe " + std::to_string(P.Pe) +
           " (" + std::to_string(Pe.Row) + "," + std::to_string(Pe.Col) +
           ") slot " + std::to_string(P.Slot) + "\n";
  }
  for (const auto &[Edge, Hops] : M.Routes) {
    if (Hops.empty())
      continue;
    const Node &C = D.Nodes[Edge.first];
    Out += "route " + D.Nodes[C.Operands[Edge.second].Node].Label + " -> " +
           C.Label + "." + std::to_string(Edge.second) + ":";
    for (const Placement &H : Hops)
      Out += " " + std::to_string(H.Pe) + "@" + std::to_string(H.Slot);
    Out += "\n";
  }
  return Out;
}
