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

//===- Generators.cpp -----------------------------------------------------===//

#include "Generators.h"

using namespace flexc;

Dfg oracle::randomKernel(std::mt19937_64 &Rng, unsigned MaxNodes) {
  const OpKind Ops[] = {OpKind::Add, OpKind::Sub, OpKind::Mul, OpKind::Xor};
  unsigned Total = 2 + Rng() % (MaxNodes - 1);
  unsigned Inputs = 1 + Rng() % 2;
  if (Inputs >= Total)
    Inputs = Total - 1;
  Dfg D;
  for (unsigned I = 0; I < Total; ++I) {
    Node N;
    N.Label = "n" + std::to_string(I);
    if (I < Inputs) {
      N.Op = OpKind::Input;
      N.Name = std::string(1, char('a' + I));
    } else {
      N.Op = Ops[Rng() % 4];
      for (int K = 0; K < 2; ++K) {
        // Mostly recent producers, sometimes a value from an earlier
        // iteration of any op.
        if (Rng() % 5 == 0) {
          uint32_t P = Inputs + Rng() % (Total - Inputs);
          N.Operands.push_back({P, 1 + uint32_t(Rng() % 2)});
        } else {
          uint32_t Lo = I > 3 ? I - 3 : 0;
          N.Operands.push_back({Lo + uint32_t(Rng() % (I - Lo)), 0});
        }
      }
    }
    D.Nodes.push_back(std::move(N));
  }
  // Outputs: every op nobody reads in the same iteration.
  std::vector<bool> Used(Total, false);
  for (const Node &N : D.Nodes)
    for (const Operand &O : N.Operands)
      if (!O.Distance)
        Used[O.Node] = true;
  for (uint32_t I = Inputs; I < Total; ++I)
    if (!Used[I])
      D.Outputs.push_back(I);
  return D;
}

CgraSpec oracle::randomGrid(std::mt19937_64 &Rng, unsigned MaxRows,
                            unsigned MaxCols) {
  unsigned Rows = 1 + Rng() % MaxRows, Cols = 1 + Rng() % MaxCols;
  const OpKind Ops[] = {OpKind::Add, OpKind::Sub, OpKind::Mul, OpKind::Xor};
  CgraSpec S = homogeneousArch("random", Rows, Cols, {});
  for (ProcessingElement &P : S.Pes) {
    P.Supported = OpSet();
    for (OpKind K : Ops)
      if (Rng() % 3 != 0)
        P.Supported.insert(K);
    if (P.Supported.empty())
      P.Supported.insert(Ops[Rng() % 4]);
  }
  return S;
}

EGraph oracle::randomEGraph(std::mt19937_64 &Rng, unsigned Nodes,
                            unsigned Merges) {
  const OpKind Ops[] = {OpKind::Add, OpKind::Sub, OpKind::Mul,
                        OpKind::Neg, OpKind::Xor, OpKind::Shl};
  EGraph G;
  std::vector<ClassId> Ids;
  for (const char *Name : {"a", "b", "c"})
    Ids.push_back(G.add(ENode::leaf(OpKind::Input, G.internSymbol(Name))));
  for (int32_t V : {-1, 1, 2})
    Ids.push_back(G.add(ENode::leaf(OpKind::Const, V)));
  while (G.nodeCount() < Nodes) {
    OpKind K = Ops[Rng() % 6];
    ENode N;
    N.Op = K;
    unsigned Arity = opArity(K);
    for (unsigned I = 0; I < Arity; ++I) {
      // Prefer recent classes so the graph gets deep.
      size_t Span = std::min<size_t>(Ids.size(), 12);
      N.Kids[N.NumKids++] = Ids[Ids.size() - 1 - Rng() % Span];
    }
    Ids.push_back(G.add(N));
  }
  for (unsigned M = 0; M < Merges; ++M)
    G.merge(Ids[Rng() % Ids.size()], Ids[Rng() % Ids.size()]);
  G.rebuild();
  unsigned Roots = 1 + Rng() % 3;
  for (unsigned R = 0; R < Roots; ++R)
    G.Roots.push_back(G.find(Ids[Ids.size() - 1 - Rng() % 10]));
  return G;
}
