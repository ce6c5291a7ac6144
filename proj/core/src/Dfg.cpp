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

//===- Dfg.cpp - Dataflow graph representation and text format ------------===//

#include "flexc/Dfg.h"
#include "flexc/Error.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

using namespace flexc;

static uint64_t doubleBits(double D) {
  uint64_t B;
  std::memcpy(&B, &D, sizeof(B));
  return B;
}

bool Node::sameContent(const Node &O) const {
  if (Op != O.Op || Operands != O.Operands)
    return false;
  switch (Op) {
  case OpKind::Const:
    return Imm == O.Imm;
  case OpKind::FConst:
    return doubleBits(FImm) == doubleBits(O.FImm);
  case OpKind::Input:
    return Name == O.Name;
  default:
    return true;
  }
}

size_t Dfg::numOps() const {
  return std::count_if(Nodes.begin(), Nodes.end(),
                       [](const Node &N) { return !isLeafOp(N.Op); });
}

bool Dfg::hasCarriedEdges() const {
  for (const Node &N : Nodes)
    for (const Operand &O : N.Operands)
      if (O.Distance)
        return true;
  return false;
}

int Dfg::find(std::string_view Label) const {
  for (size_t I = 0; I < Nodes.size(); ++I)
    if (Nodes[I].Label == Label)
      return static_cast<int>(I);
  return -1;
}

static void mix(uint64_t &H, uint64_t V) {
  H ^= V + 0x9e3779b97f4a7c15ULL + (H << 6) + (H >> 2);
}

uint64_t Dfg::fingerprint() const {
  uint64_t H = Nodes.size();
  std::hash<std::string> SH;
  for (const Node &N : Nodes) {
    mix(H, SH(N.Label));
    mix(H, static_cast<uint64_t>(N.Op));
    mix(H, static_cast<uint64_t>(static_cast<uint32_t>(N.Imm)));
    mix(H, doubleBits(N.FImm));
    mix(H, SH(N.Name));
    for (const Operand &O : N.Operands) {
      mix(H, O.Node);
      mix(H, O.Distance);
    }
  }
  for (uint32_t O : Outputs)
    mix(H, O);
  return H;
}

bool Dfg::operator==(const Dfg &O) const {
  if (Nodes.size() != O.Nodes.size() || Outputs != O.Outputs)
    return false;
  for (size_t I = 0; I < Nodes.size(); ++I)
    if (Nodes[I].Label != O.Nodes[I].Label ||
        !Nodes[I].sameContent(O.Nodes[I]))
      return false;
  return true;
}

//===----------------------------------------------------------------------===//
// Validation and cost
//===----------------------------------------------------------------------===//

std::vector<Violation> flexc::validate(const Dfg &D) {
  std::vector<Violation> Out;
  std::unordered_map<std::string, size_t> Seen;
  const size_t N = D.Nodes.size();
  for (size_t I = 0; I < N; ++I) {
    const Node &Nd = D.Nodes[I];
    if (!Seen.emplace(Nd.Label, I).second)
      Out.push_back({Violation::DuplicateLabel,
                     "duplicate node id '" + Nd.Label + "'"});
    if (Nd.Operands.size() != opArity(Nd.Op))
      Out.push_back({Violation::Arity,
                     "node '" + Nd.Label + "' (" + std::string(opName(Nd.Op)) +
                         ") has " + std::to_string(Nd.Operands.size()) +
                         " operands, expected " +
                         std::to_string(opArity(Nd.Op))});
    for (const Operand &O : Nd.Operands)
      if (O.Node >= N)
        Out.push_back({Violation::Dangling,
                       "node '" + Nd.Label + "' references missing node #" +
                           std::to_string(O.Node)});
  }
  if (D.Outputs.empty())
    Out.push_back({Violation::NoOutputs, "graph has no outputs"});
  for (uint32_t O : D.Outputs)
    if (O >= N)
      Out.push_back({Violation::BadOutput,
                     "output references missing node #" + std::to_string(O)});

  // Cycle detection over in-range distance-0 edges, independent of order.
  std::vector<uint8_t> State(N, 0);
  std::vector<std::pair<uint32_t, size_t>> Stack;
  for (uint32_t Root = 0; Root < N; ++Root) {
    if (State[Root])
      continue;
    Stack.push_back({Root, 0});
    State[Root] = 1;
    while (!Stack.empty()) {
      auto &[Cur, Idx] = Stack.back();
      const auto &Ops = D.Nodes[Cur].Operands;
      if (Idx == Ops.size()) {
        State[Cur] = 2;
        Stack.pop_back();
        continue;
      }
      const Operand &O = Ops[Idx++];
      if (O.Distance || O.Node >= N)
        continue;
      if (State[O.Node] == 1) {
        Out.push_back({Violation::Cycle,
                       "distance-0 cycle through edge '" +
                           D.Nodes[O.Node].Label + "' -> '" +
                           D.Nodes[Cur].Label + "'"});
        continue;
      }
      if (State[O.Node] == 0) {
        State[O.Node] = 1;
        Stack.push_back({O.Node, 0});
      }
    }
  }
  return Out;
}

std::vector<uint32_t> flexc::unsupportedNodes(const Dfg &D, const OpSet &Ops) {
  std::vector<uint32_t> Out;
  for (uint32_t I = 0; I < D.Nodes.size(); ++I)
    if (!isLeafOp(D.Nodes[I].Op) && !Ops.contains(D.Nodes[I].Op))
      Out.push_back(I);
  return Out;
}

uint64_t flexc::cost(const Dfg &D, const OpSet &Ops) {
  uint64_t C = 0;
  for (const Node &N : D.Nodes)
    if (!isLeafOp(N.Op))
      C += Ops.contains(N.Op) ? 1 : UnsupportedPenalty;
  return C;
}

//===----------------------------------------------------------------------===//
// Graph utilities
//===----------------------------------------------------------------------===//

static Dfg permuted(const Dfg &D, const std::vector<uint32_t> &Order) {
  std::vector<uint32_t> NewIdx(D.Nodes.size(), UINT32_MAX);
  for (uint32_t I = 0; I < Order.size(); ++I)
    NewIdx[Order[I]] = I;
  Dfg Out;
  Out.Nodes.reserve(Order.size());
  for (uint32_t Old : Order) {
    Node N = D.Nodes[Old];
    for (Operand &O : N.Operands)
      O.Node = NewIdx[O.Node];
    Out.Nodes.push_back(std::move(N));
  }
  for (uint32_t O : D.Outputs)
    Out.Outputs.push_back(NewIdx[O]);
  return Out;
}

Dfg flexc::topoSorted(const Dfg &D) {
  const size_t N = D.Nodes.size();
  std::vector<uint32_t> InDeg(N, 0);
  std::vector<std::vector<uint32_t>> Users(N);
  for (uint32_t I = 0; I < N; ++I)
    for (const Operand &O : D.Nodes[I].Operands)
      if (!O.Distance) {
        ++InDeg[I];
        Users[O.Node].push_back(I);
      }
  std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> Ready;
  for (uint32_t I = 0; I < N; ++I)
    if (!InDeg[I])
      Ready.push(I);
  std::vector<uint32_t> Order;
  Order.reserve(N);
  while (!Ready.empty()) {
    uint32_t I = Ready.top();
    Ready.pop();
    Order.push_back(I);
    for (uint32_t U : Users[I])
      if (--InDeg[U] == 0)
        Ready.push(U);
  }
  if (Order.size() != N)
    throw InvalidGraphError("distance-0 cycle in dataflow graph");
  return permuted(D, Order);
}

Dfg flexc::removeDead(const Dfg &D) {
  std::vector<uint8_t> Live(D.Nodes.size(), 0);
  std::vector<uint32_t> Work(D.Outputs.begin(), D.Outputs.end());
  while (!Work.empty()) {
    uint32_t I = Work.back();
    Work.pop_back();
    if (Live[I])
      continue;
    Live[I] = 1;
    for (const Operand &O : D.Nodes[I].Operands)
      Work.push_back(O.Node);
  }
  std::vector<uint32_t> Order;
  for (uint32_t I = 0; I < D.Nodes.size(); ++I)
    if (Live[I])
      Order.push_back(I);
  return permuted(D, Order);
}

std::string flexc::structuralKey(const Dfg &D) {
  // Carried operands are keyed by producer position, not interned id.
  Dfg G = removeDead(D);
  std::map<std::string, uint32_t> Intern;
  std::vector<uint32_t> Id(G.Nodes.size());
  std::string Body;
  for (uint32_t I = 0; I < G.Nodes.size(); ++I) {
    const Node &N = G.Nodes[I];
    std::string K(opName(N.Op));
    if (N.Op == OpKind::Const)
      K += ' ' + std::to_string(N.Imm);
    else if (N.Op == OpKind::FConst)
      K += ' ' + std::to_string(doubleBits(N.FImm));
    else if (N.Op == OpKind::Input)
      K += ' ' + N.Name;
    for (const Operand &O : N.Operands) {
      if (O.Distance)
        K += " @" + std::to_string(O.Node) + '/' + std::to_string(O.Distance);
      else
        K += ' ' + std::to_string(Id[O.Node]);
    }
    auto [It, New] = Intern.emplace(K, Intern.size());
    Id[I] = It->second;
    if (New)
      Body += K + ';';
  }
  Body += '|';
  for (uint32_t O : G.Outputs)
    Body += std::to_string(Id[O]) + ',';
  return Body;
}

//===----------------------------------------------------------------------===//
// Text format
//===----------------------------------------------------------------------===//

static std::vector<std::string_view> splitWords(std::string_view Line) {
  std::vector<std::string_view> Words;
  size_t I = 0;
  while (I < Line.size()) {
    while (I < Line.size() && std::isspace(static_cast<unsigned char>(Line[I])))
      ++I;
    size_t B = I;
    while (I < Line.size() && !std::isspace(static_cast<unsigned char>(Line[I])))
      ++I;
    if (I > B)
      Words.push_back(Line.substr(B, I - B));
  }
  return Words;
}

template <typename T>
static bool parseNumber(std::string_view S, T &Out) {
  auto [P, Ec] = std::from_chars(S.data(), S.data() + S.size(), Out);
  return Ec == std::errc() && P == S.data() + S.size();
}

static bool parseDouble(std::string_view S, double &Out) {
  std::string Str(S);
  char *End = nullptr;
  Out = std::strtod(Str.c_str(), &End);
  return !Str.empty() && End == Str.c_str() + Str.size();
}

Dfg flexc::parseDfg(std::string_view Text) {
  struct PendingNode {
    Node N;
    std::vector<std::string> Refs;
    unsigned Line;
  };
  struct DistLine {
    std::string From, To;
    uint32_t K;
    int Slot;
    unsigned Line;
  };
  std::vector<PendingNode> Pending;
  std::vector<std::pair<std::string, unsigned>> OutRefs;
  std::vector<DistLine> Dists;
  std::unordered_map<std::string, uint32_t> Index;

  unsigned LineNo = 0;
  size_t Pos = 0;
  while (Pos <= Text.size()) {
    size_t End = Text.find('\n', Pos);
    if (End == std::string_view::npos)
      End = Text.size();
    std::string_view Line = Text.substr(Pos, End - Pos);
    Pos = End + 1;
    ++LineNo;
    if (size_t Hash = Line.find('#'); Hash != std::string_view::npos)
      Line = Line.substr(0, Hash);
    auto W = splitWords(Line);
    if (W.empty())
      continue;

    if (W[0] == "out") {
      if (W.size() != 2)
        throw ParseError("expected 'out <id>'", LineNo);
      OutRefs.push_back({std::string(W[1]), LineNo});
      continue;
    }
    if (W[0] == "dist") {
      DistLine DL;
      int64_t K;
      if ((W.size() != 4 && W.size() != 5) || !parseNumber(W[3], K) || K < 0 ||
          K > UINT32_MAX)
        throw ParseError("expected 'dist <from> <to> <k>' with k >= 0",
                         LineNo);
      DL.From = W[1];
      DL.To = W[2];
      DL.K = static_cast<uint32_t>(K);
      DL.Slot = -1;
      if (W.size() == 5 && (!parseNumber(W[4], DL.Slot) || DL.Slot < 0))
        throw ParseError("bad operand slot in dist annotation", LineNo);
      DL.Line = LineNo;
      Dists.push_back(DL);
      continue;
    }
    if (W.size() < 2)
      throw ParseError("expected '<id> <op> ...'", LineNo);
    PendingNode P;
    P.Line = LineNo;
    P.N.Label = W[0];
    auto K = opFromName(W[1]);
    if (!K)
      throw ParseError("unknown op '" + std::string(W[1]) + "'", LineNo);
    P.N.Op = *K;
    if (*K == OpKind::Const) {
      if (W.size() != 3 || !parseNumber(W[2], P.N.Imm))
        throw ParseError("const expects one 32-bit integer literal", LineNo);
    } else if (*K == OpKind::FConst) {
      if (W.size() != 3 || !parseDouble(W[2], P.N.FImm))
        throw ParseError("fconst expects one float literal", LineNo);
    } else if (*K == OpKind::Input) {
      if (W.size() != 3)
        throw ParseError("input expects one name", LineNo);
      P.N.Name = W[2];
    } else {
      if (W.size() - 2 != opArity(*K))
        throw ParseError(std::string(opName(*K)) + " expects " +
                             std::to_string(opArity(*K)) + " operands",
                         LineNo);
      for (size_t I = 2; I < W.size(); ++I)
        P.Refs.emplace_back(W[I]);
    }
    if (!Index.emplace(P.N.Label, Pending.size()).second)
      throw ParseError("duplicate node id '" + P.N.Label + "'", LineNo);
    Pending.push_back(std::move(P));
  }

  Dfg D;
  for (auto &P : Pending) {
    for (const std::string &R : P.Refs) {
      auto It = Index.find(R);
      if (It == Index.end())
        throw ParseError("dangling reference to '" + R + "'", P.Line);
      P.N.Operands.push_back({It->second, 0});
    }
    D.Nodes.push_back(std::move(P.N));
  }
  for (const DistLine &DL : Dists) {
    auto F = Index.find(DL.From), T = Index.find(DL.To);
    if (F == Index.end() || T == Index.end())
      throw ParseError("dist annotation references unknown node", DL.Line);
    bool Hit = false;
    auto &Ops = D.Nodes[T->second].Operands;
    for (size_t S = 0; S < Ops.size(); ++S)
      if (Ops[S].Node == F->second && (DL.Slot < 0 || DL.Slot == int(S))) {
        Ops[S].Distance = DL.K;
        Hit = true;
      }
    if (!Hit)
      throw ParseError("dist annotation names no edge " + DL.From + " -> " +
                           DL.To,
                       DL.Line);
  }
  for (auto &[R, Line] : OutRefs) {
    auto It = Index.find(R);
    if (It == Index.end())
      throw ParseError("dangling output reference '" + R + "'", Line);
    D.Outputs.push_back(It->second);
  }
  if (D.Outputs.empty())
    throw ParseError("graph has no 'out' line", LineNo);
  try {
    return topoSorted(D);
  } catch (const InvalidGraphError &E) {
    throw ParseError(E.what());
  }
}

static std::string formatDouble(double D) {
  char Buf[40];
  std::snprintf(Buf, sizeof(Buf), "%.17g", D);
  std::string S = Buf;
  if (S.find_first_of(".eEn") == std::string::npos)
    S += ".0";
  return S;
}

std::string flexc::serializeDfg(const Dfg &D) {
  std::ostringstream OS;
  for (const Node &N : D.Nodes) {
    OS << N.Label << ' ' << opName(N.Op);
    if (N.Op == OpKind::Const)
      OS << ' ' << N.Imm;
    else if (N.Op == OpKind::FConst)
      OS << ' ' << formatDouble(N.FImm);
    else if (N.Op == OpKind::Input)
      OS << ' ' << N.Name;
    for (const Operand &O : N.Operands)
      OS << ' ' << D.Nodes[O.Node].Label;
    OS << '\n';
  }
  for (const Node &N : D.Nodes) {
    for (size_t S = 0; S < N.Operands.size(); ++S) {
      const Operand &O = N.Operands[S];
      if (!O.Distance)
        continue;
      bool Ambiguous = false;
      for (size_t T = 0; T < N.Operands.size(); ++T)
        if (T != S && N.Operands[T].Node == O.Node &&
            N.Operands[T].Distance != O.Distance)
          Ambiguous = true;
      OS << "dist " << D.Nodes[O.Node].Label << ' ' << N.Label << ' '
         << O.Distance;
      if (Ambiguous)
        OS << ' ' << S;
      OS << '\n';
    }
  }
  for (uint32_t O : D.Outputs)
    OS << "out " << D.Nodes[O].Label << '\n';
  return OS.str();
}

//===----------------------------------------------------------------------===//
// DfgBuilder
//===----------------------------------------------------------------------===//

uint32_t DfgBuilder::add(Node N) {
  N.Label = "n" + std::to_string(G.Nodes.size());
  G.Nodes.push_back(std::move(N));
  return static_cast<uint32_t>(G.Nodes.size() - 1);
}

uint32_t DfgBuilder::input(std::string Name) {
  Node N;
  N.Op = OpKind::Input;
  N.Name = std::move(Name);
  return add(std::move(N));
}

uint32_t DfgBuilder::constant(int32_t V) {
  Node N;
  N.Op = OpKind::Const;
  N.Imm = V;
  return add(std::move(N));
}

uint32_t DfgBuilder::fconstant(double V) {
  Node N;
  N.Op = OpKind::FConst;
  N.FImm = V;
  return add(std::move(N));
}

uint32_t DfgBuilder::op(OpKind K, std::vector<Operand> Operands) {
  Node N;
  N.Op = K;
  N.Operands = std::move(Operands);
  return add(std::move(N));
}

uint32_t DfgBuilder::op(OpKind K, std::initializer_list<uint32_t> Operands) {
  std::vector<Operand> Ops;
  for (uint32_t O : Operands)
    Ops.push_back({O, 0});
  return op(K, std::move(Ops));
}

Dfg DfgBuilder::build() {
  Dfg Out = topoSorted(G);
  G = Dfg();
  return Out;
}
