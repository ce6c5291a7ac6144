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

//===- Matcher.cpp --------------------------------------------------------===//

#include "flexc/Matcher.h"
#include "flexc/Error.h"

#include <cstring>
#include <optional>
#include <unordered_set>

using namespace flexc;

namespace {

using Binding = std::vector<std::optional<Operand>>;

bool sameLiteral(const PatNode &P, const Node &N) {
  if (P.Op == OpKind::Const)
    return N.Imm == P.Imm;
  if (P.Op == OpKind::FConst)
    return std::memcmp(&N.FImm, &P.FImm, sizeof(double)) == 0;
  return true;
}

bool matchAt(const Dfg &D, const Pattern &P, uint32_t PI, Operand Target,
             Binding &B) {
  const PatNode &PN = P.Nodes[PI];
  if (PN.IsVar) {
    auto &Slot = B[PN.Var];
    if (Slot)
      return *Slot == Target;
    Slot = Target;
    return true;
  }
  if (Target.Distance)
    return false;
  const Node &N = D.Nodes[Target.Node];
  if (N.Op != PN.Op || !sameLiteral(PN, N) ||
      N.Operands.size() != PN.Children.size())
    return false;
  for (size_t I = 0; I < PN.Children.size(); ++I)
    if (!matchAt(D, P, PN.Children[I], N.Operands[I], B))
      return false;
  return true;
}

/// True if \p From reaches any node in \p Roots through distance-0 operands.
bool dependsOnRoots(const Dfg &D, uint32_t From,
                    const std::vector<uint32_t> &Roots) {
  std::vector<uint8_t> Seen(D.Nodes.size(), 0);
  std::vector<uint32_t> Work{From};
  while (!Work.empty()) {
    uint32_t I = Work.back();
    Work.pop_back();
    if (Seen[I])
      continue;
    Seen[I] = 1;
    for (uint32_t R : Roots)
      if (R == I)
        return true;
    for (const Operand &O : D.Nodes[I].Operands)
      if (!O.Distance)
        Work.push_back(O.Node);
  }
  return false;
}

bool acceptable(const Dfg &D, const RewriteRule &R, const Match &M) {
  for (uint32_t O : R.Rhs.Outputs) {
    const PatNode &PN = R.Rhs.Nodes[O];
    if (PN.IsVar && M.Subst[PN.Var].Distance)
      return false;
  }
  if (M.Roots.size() > 1)
    for (const Operand &S : M.Subst)
      if (!S.Distance && dependsOnRoots(D, S.Node, M.Roots))
        return false;
  return true;
}

void enumerate(const Dfg &D, const RewriteRule &R, size_t OutIdx,
               std::vector<uint32_t> &Roots, const Binding &B, uint64_t Fp,
               std::vector<Match> &Out) {
  if (OutIdx == R.Lhs.Outputs.size()) {
    Match M;
    M.Roots = Roots;
    M.GraphFingerprint = Fp;
    for (const auto &S : B)
      M.Subst.push_back(S.value_or(Operand{}));
    if (acceptable(D, R, M))
      Out.push_back(std::move(M));
    return;
  }
  for (uint32_t I = 0; I < D.Nodes.size(); ++I) {
    Binding Trial = B;
    if (!matchAt(D, R.Lhs, R.Lhs.Outputs[OutIdx], {I, 0}, Trial))
      continue;
    Roots.push_back(I);
    enumerate(D, R, OutIdx + 1, Roots, Trial, Fp, Out);
    Roots.pop_back();
  }
}

} // namespace

std::vector<Match> flexc::findMatches(const Dfg &D, const RewriteRule &R) {
  std::vector<Match> Out;
  std::vector<uint32_t> Roots;
  Binding B(R.VarNames.size());
  enumerate(D, R, 0, Roots, B, D.fingerprint(), Out);
  return Out;
}

Dfg flexc::applyMatch(const Dfg &D, const Match &M, const RewriteRule &R) {
  if (D.fingerprint() != M.GraphFingerprint)
    throw StaleMatchError("match was found in a different graph");

  Dfg G = D;
  const uint32_t FirstNew = static_cast<uint32_t>(G.Nodes.size());
  std::unordered_set<std::string> Labels;
  for (const Node &N : G.Nodes)
    Labels.insert(N.Label);
  uint32_t Counter = FirstNew;
  auto Fresh = [&] {
    std::string L;
    do
      L = "r" + std::to_string(Counter++);
    while (!Labels.insert(L).second);
    return L;
  };

  // Instantiate the right-hand side.
  std::vector<Operand> Inst(R.Rhs.Nodes.size());
  for (size_t I = 0; I < R.Rhs.Nodes.size(); ++I) {
    const PatNode &PN = R.Rhs.Nodes[I];
    if (PN.IsVar) {
      Inst[I] = M.Subst[PN.Var];
      continue;
    }
    Node N;
    N.Label = Fresh();
    N.Op = PN.Op;
    N.Imm = PN.Imm;
    N.FImm = PN.FImm;
    for (uint32_t C : PN.Children)
      N.Operands.push_back(Inst[C]);
    G.Nodes.push_back(std::move(N));
    Inst[I] = {static_cast<uint32_t>(G.Nodes.size() - 1), 0};
  }

  // Root -> replacement operand.
  std::vector<std::optional<Operand>> Repl(G.Nodes.size());
  for (size_t J = 0; J < M.Roots.size(); ++J) {
    Operand To = Inst[R.Rhs.Outputs[J]];
    if (To.Node == M.Roots[J] && To.Distance == 0)
      continue;
    Repl[M.Roots[J]] = To;
  }

  for (uint32_t I = 0; I < G.Nodes.size(); ++I) {
    for (Operand &O : G.Nodes[I].Operands) {
      if (!Repl[O.Node])
        continue;
      // Fresh nodes keep same-iteration references to a root that a
      // variable bound to.
      if (I >= FirstNew && O.Distance == 0)
        continue;
      O = {Repl[O.Node]->Node, Repl[O.Node]->Distance + O.Distance};
    }
  }
  for (uint32_t &O : G.Outputs)
    if (Repl[O])
      O = Repl[O]->Node;

  return topoSorted(removeDead(G));
}
