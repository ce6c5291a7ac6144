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

//===- EGraph.cpp ---------------------------------------------------------===//

#include "flexc/EGraph.h"
#include "flexc/Error.h"

#include <algorithm>
#include <cstring>
#include <map>
#include <ostream>
#include <set>

using namespace flexc;

ENode ENode::op(OpKind K, std::initializer_list<ClassId> Children) {
  ENode N;
  N.Op = K;
  for (ClassId C : Children)
    N.Kids[N.NumKids++] = C;
  return N;
}

bool ENode::operator<(const ENode &O) const {
  if (Op != O.Op)
    return Op < O.Op;
  if (Lit != O.Lit)
    return Lit < O.Lit;
  if (NumKids != O.NumKids)
    return NumKids < O.NumKids;
  return Kids < O.Kids;
}

size_t ENodeHash::operator()(const ENode &N) const {
  uint64_t H = static_cast<uint64_t>(N.Op) * 0x100000001b3ULL ^
               static_cast<uint64_t>(N.Lit) * 0x9e3779b97f4a7c15ULL;
  for (unsigned I = 0; I < N.NumKids; ++I)
    H = (H ^ N.Kids[I]) * 0xff51afd7ed558ccdULL;
  return static_cast<size_t>(H ^ (H >> 29));
}

ClassId EGraph::find(ClassId C) const {
  while (Parent[C] != C) {
    Parent[C] = Parent[Parent[C]];
    C = Parent[C];
  }
  return C;
}

ENode EGraph::canonicalize(ENode N) const {
  for (unsigned I = 0; I < N.NumKids; ++I)
    N.Kids[I] = find(N.Kids[I]);
  return N;
}

std::optional<ClassId> EGraph::lookup(ENode N) const {
  auto It = Memo.find(canonicalize(N));
  if (It == Memo.end())
    return std::nullopt;
  return find(It->second);
}

ClassId EGraph::add(ENode N) {
  N = canonicalize(N);
  if (auto It = Memo.find(N); It != Memo.end())
    return find(It->second);
  ClassId Id = static_cast<ClassId>(Classes.size());
  Parent.push_back(Id);
  Rank.push_back(0);
  Classes.emplace_back();
  Classes.back().Nodes.push_back(N);
  for (unsigned I = 0; I < N.NumKids; ++I) {
    bool Dup = false;
    for (unsigned J = 0; J < I; ++J)
      Dup |= N.Kids[J] == N.Kids[I];
    if (!Dup)
      Classes[N.Kids[I]].Parents.push_back({N, Id});
  }
  Memo.emplace(N, Id);
  ++NumNodes;
  ++NumClasses;
  return Id;
}

ClassId EGraph::merge(ClassId A, ClassId B) {
  A = find(A);
  B = find(B);
  if (A == B)
    return A;
  if (Rank[A] < Rank[B] || (Rank[A] == Rank[B] && B < A))
    std::swap(A, B);
  if (Rank[A] == Rank[B]) {
    ++Rank[A];
    ++RankIncreases;
  }
  Parent[B] = A;
  EClass &Win = Classes[A], &Lose = Classes[B];
  Pending.insert(Pending.end(), Lose.Parents.begin(), Lose.Parents.end());
  Win.Nodes.insert(Win.Nodes.end(), Lose.Nodes.begin(), Lose.Nodes.end());
  Win.Parents.insert(Win.Parents.end(), Lose.Parents.begin(),
                     Lose.Parents.end());
  Lose.Nodes.clear();
  Lose.Nodes.shrink_to_fit();
  Lose.Parents.clear();
  Lose.Parents.shrink_to_fit();
  --NumClasses;
  return A;
}

void EGraph::rebuild() {
  if (Pending.empty())
    return;
  while (!Pending.empty()) {
    auto Todo = std::move(Pending);
    Pending.clear();
    for (auto &[N, C] : Todo) {
      ENode Canon = canonicalize(N);
      auto [It, Inserted] = Memo.try_emplace(Canon, C);
      if (!Inserted && find(It->second) != find(C))
        merge(It->second, C);
    }
  }

  Memo.clear();
  NumNodes = 0;
  for (ClassId C = 0; C < Classes.size(); ++C) {
    if (Parent[C] != C)
      continue;
    EClass &E = Classes[C];
    for (ENode &N : E.Nodes)
      N = canonicalize(N);
    std::sort(E.Nodes.begin(), E.Nodes.end());
    E.Nodes.erase(std::unique(E.Nodes.begin(), E.Nodes.end()), E.Nodes.end());
    NumNodes += E.Nodes.size();
    for (const ENode &N : E.Nodes)
      Memo.emplace(N, C);

    for (auto &[PN, PC] : E.Parents) {
      PN = canonicalize(PN);
      PC = find(PC);
    }
    std::sort(E.Parents.begin(), E.Parents.end(),
              [](const auto &L, const auto &R) {
                return L.first < R.first ||
                       (L.first == R.first && L.second < R.second);
              });
    E.Parents.erase(std::unique(E.Parents.begin(), E.Parents.end()),
                    E.Parents.end());
  }
}

std::vector<ClassId> EGraph::classIds() const {
  std::vector<ClassId> Out;
  Out.reserve(NumClasses);
  for (ClassId C = 0; C < Classes.size(); ++C)
    if (Parent[C] == C)
      Out.push_back(C);
  return Out;
}

int64_t EGraph::internSymbol(const std::string &Name) {
  auto [It, New] = SymbolIds.emplace(Name, Symbols.size());
  if (New) {
    Symbols.push_back(Name);
    SymbolCarry.push_back(-1);
  }
  return It->second;
}

int EGraph::carrySlotOf(int64_t Symbol) const {
  return Symbol >= 0 && Symbol < int64_t(SymbolCarry.size())
             ? SymbolCarry[Symbol]
             : -1;
}

ClassId EGraph::addCarry(uint32_t Distance) {
  int Slot = static_cast<int>(Carries.size());
  int64_t Sym = internSymbol("%carry" + std::to_string(Slot));
  SymbolCarry[Sym] = Slot;
  Carries.push_back({0, Distance});
  return add(ENode::leaf(OpKind::Input, Sym));
}

bool EGraph::checkInvariants(std::string *Why) const {
  auto Fail = [&](std::string Msg) {
    if (Why)
      *Why = std::move(Msg);
    return false;
  };
  if (!Pending.empty())
    return Fail("pending merges");
  size_t Count = 0, NClasses = 0;
  std::map<ENode, ClassId> Seen;
  for (ClassId C = 0; C < Classes.size(); ++C) {
    if (Parent[C] != C)
      continue;
    ++NClasses;
    if (Classes[C].Nodes.empty())
      return Fail("empty class " + std::to_string(C));
    for (const ENode &N : Classes[C].Nodes) {
      ++Count;
      if (!(canonicalize(N) == N))
        return Fail("non-canonical node in class " + std::to_string(C));
      auto [It, New] = Seen.emplace(N, C);
      if (!New)
        return Fail("congruent nodes in classes " + std::to_string(It->second) +
                    " and " + std::to_string(C));
      auto M = Memo.find(N);
      if (M == Memo.end() || find(M->second) != C)
        return Fail("hashcons entry missing or wrong");
    }
  }
  if (Count != NumNodes)
    return Fail("node count mismatch");
  if (NClasses != NumClasses)
    return Fail("class count mismatch");
  if (Memo.size() != Count)
    return Fail("stale hashcons entries");
  return true;
}

static void dumpNode(std::ostream &OS, const EGraph &G, const ENode &N) {
  OS << opName(N.Op);
  if (N.Op == OpKind::Const)
    OS << ' ' << N.Lit;
  else if (N.Op == OpKind::FConst) {
    double D;
    std::memcpy(&D, &N.Lit, sizeof(D));
    OS << ' ' << D;
  } else if (N.Op == OpKind::Input)
    OS << ' ' << G.symbol(N.Lit);
  for (unsigned I = 0; I < N.NumKids; ++I)
    OS << " e" << N.Kids[I];
}

void EGraph::dump(std::ostream &OS) const {
  OS << "# classes " << NumClasses << " nodes " << NumNodes << '\n';
  for (ClassId C : classIds()) {
    OS << 'e' << C << ':';
    for (const ENode &N : Classes[C].Nodes) {
      OS << "\n  ";
      dumpNode(OS, *this, N);
    }
    OS << '\n';
  }
  OS << "roots";
  for (ClassId R : Roots)
    OS << " e" << find(R);
  OS << '\n';
  for (size_t S = 0; S < Carries.size(); ++S)
    OS << "carry" << S << " e" << find(Carries[S].Producer) << " distance "
       << Carries[S].Distance << '\n';
}

EGraph flexc::egraphInit(const Dfg &D) {
  EGraph G;
  std::vector<ClassId> Cls(D.Nodes.size());
  std::map<std::pair<uint32_t, uint32_t>, ClassId> CarryLeaf;
  std::vector<std::pair<size_t, uint32_t>> CarryProducer;
  for (size_t I = 0; I < D.Nodes.size(); ++I) {
    const Node &N = D.Nodes[I];
    ENode E;
    E.Op = N.Op;
    switch (N.Op) {
    case OpKind::Const:
      E.Lit = N.Imm;
      break;
    case OpKind::FConst:
      std::memcpy(&E.Lit, &N.FImm, sizeof(double));
      break;
    case OpKind::Input:
      E.Lit = G.internSymbol(N.Name);
      break;
    default:
      for (const Operand &O : N.Operands) {
        ClassId K;
        if (!O.Distance) {
          K = Cls[O.Node];
        } else {
          auto Key = std::make_pair(O.Node, O.Distance);
          auto It = CarryLeaf.find(Key);
          if (It == CarryLeaf.end()) {
            CarryProducer.push_back({G.carries().size(), O.Node});
            It = CarryLeaf.emplace(Key, G.addCarry(O.Distance)).first;
          }
          K = It->second;
        }
        E.Kids[E.NumKids++] = K;
      }
    }
    Cls[I] = G.add(E);
    G.Origins.push_back({Cls[I], G.canonicalize(E)});
  }
  for (auto [Slot, Producer] : CarryProducer)
    G.carries()[Slot].Producer = Cls[Producer];
  for (uint32_t O : D.Outputs)
    G.Roots.push_back(Cls[O]);
  return G;
}

//===----------------------------------------------------------------------===//
// E-matching
//===----------------------------------------------------------------------===//

ENode flexc::patternLeaf(const PatNode &N) {
  ENode E;
  E.Op = N.Op;
  if (N.Op == OpKind::Const)
    E.Lit = N.Imm;
  else
    std::memcpy(&E.Lit, &N.FImm, sizeof(double));
  return E;
}

namespace {

using Binding = std::vector<ClassId>;
constexpr ClassId Unbound = UINT32_MAX;

class Matcher {
public:
  Matcher(const EGraph &G, const Pattern &P) : G(G), P(P) {}

  void matchClass(uint32_t PI, ClassId C, const Binding &B,
                  std::vector<Binding> &Out) const {
    const PatNode &PN = P.Nodes[PI];
    if (PN.IsVar) {
      if (B[PN.Var] == Unbound) {
        Out.push_back(B);
        Out.back()[PN.Var] = C;
      } else if (B[PN.Var] == C) {
        Out.push_back(B);
      }
      return;
    }
    bool IsLeaf = PN.Children.empty();
    ENode Want = IsLeaf ? patternLeaf(PN) : ENode();
    std::vector<Binding> Partial, Next;
    for (const ENode &N : G.eclass(C).Nodes) {
      if (N.Op != PN.Op || N.NumKids != PN.Children.size())
        continue;
      if (IsLeaf) {
        if (N.Lit == Want.Lit)
          Out.push_back(B);
        continue;
      }
      Partial.assign(1, B);
      for (size_t K = 0; K < PN.Children.size() && !Partial.empty(); ++K) {
        Next.clear();
        for (const Binding &PB : Partial)
          matchClass(PN.Children[K], N.Kids[K], PB, Next);
        Partial.swap(Next);
      }
      Out.insert(Out.end(), Partial.begin(), Partial.end());
    }
  }

private:
  const EGraph &G;
  const Pattern &P;
};

} // namespace

MatchSet
flexc::ematch(const EGraph &G, const Pattern &P, size_t NumVars,
              std::optional<std::chrono::steady_clock::time_point> Deadline,
              bool *TimedOut) {
  if (TimedOut)
    *TimedOut = false;
  Matcher M(G, P);
  std::vector<ClassId> Ids = G.classIds();
  // Partial matches over the outputs handled so far.
  MatchSet Partial(0, NumVars);
  Partial.push({}, Binding(NumVars, Unbound));
  size_t Steps = 0, NextCheck = 1024;
  std::vector<Binding> Found;
  for (size_t O = 0; O < P.Outputs.size(); ++O) {
    const PatNode &Root = P.Nodes[P.Outputs[O]];
    MatchSet Next(O + 1, NumVars);
    std::vector<ClassId> Roots(O + 1);
    for (size_t I = 0; I < Partial.size(); ++I) {
      auto Prev = Partial.roots(I);
      std::copy(Prev.begin(), Prev.end(), Roots.begin());
      Binding B(Partial.subst(I).begin(), Partial.subst(I).end());
      for (ClassId C : Ids) {
        if (++Steps >= NextCheck && Deadline) {
          NextCheck = Steps + 1024;
          if (std::chrono::steady_clock::now() > *Deadline) {
            if (TimedOut)
              *TimedOut = true;
            return MatchSet(P.Outputs.size(), NumVars);
          }
        }
        if (!Root.IsVar) {
          bool Any = false;
          for (const ENode &N : G.eclass(C).Nodes)
            if (N.Op == Root.Op) {
              Any = true;
              break;
            }
          if (!Any)
            continue;
        }
        Found.clear();
        M.matchClass(P.Outputs[O], C, B, Found);
        Steps += Found.size();
        std::sort(Found.begin(), Found.end());
        Found.erase(std::unique(Found.begin(), Found.end()), Found.end());
        Roots[O] = C;
        for (const Binding &F : Found)
          Next.push(Roots, F);
      }
    }
    Partial = std::move(Next);
  }
  return Partial;
}

std::vector<ClassId> flexc::instantiate(EGraph &G, const Pattern &P,
                                        std::span<const ClassId> Subst) {
  std::vector<ClassId> Cls(P.Nodes.size());
  for (size_t I = 0; I < P.Nodes.size(); ++I) {
    const PatNode &PN = P.Nodes[I];
    if (PN.IsVar) {
      Cls[I] = Subst[PN.Var];
    } else if (PN.Children.empty()) {
      Cls[I] = G.add(patternLeaf(PN));
    } else {
      ENode N;
      N.Op = PN.Op;
      for (uint32_t C : PN.Children)
        N.Kids[N.NumKids++] = Cls[C];
      Cls[I] = G.add(N);
    }
  }
  std::vector<ClassId> Out;
  for (uint32_t O : P.Outputs)
    Out.push_back(Cls[O]);
  return Out;
}
