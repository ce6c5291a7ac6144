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

//===- Dfg.h - Dataflow graphs -----------------------------------*- C++ -*-===//
//
// A Dfg is a list of nodes in topological order over distance-0 edges plus a
// list of output node indices. Operands with a nonzero distance read the
// producer's value from that many iterations earlier and may point forward.
//
//===----------------------------------------------------------------------===//

#ifndef FLEXC_DFG_H
#define FLEXC_DFG_H

#include "flexc/Op.h"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace flexc {

constexpr uint64_t UnsupportedPenalty = 1'000'000;

struct Operand {
  uint32_t Node = 0;
  uint32_t Distance = 0;

  bool operator==(const Operand &O) const {
    return Node == O.Node && Distance == O.Distance;
  }
  bool operator<(const Operand &O) const {
    return Node != O.Node ? Node < O.Node : Distance < O.Distance;
  }
};

struct Node {
  std::string Label;
  OpKind Op = OpKind::Const;
  std::vector<Operand> Operands;
  int32_t Imm = 0;   // const
  double FImm = 0.0; // fconst
  std::string Name;  // input

  bool sameContent(const Node &O) const;
};

struct Dfg {
  std::vector<Node> Nodes;
  std::vector<uint32_t> Outputs;

  size_t size() const { return Nodes.size(); }
  /// Number of non-leaf nodes.
  size_t numOps() const;
  bool hasCarriedEdges() const;
  int find(std::string_view Label) const;

  /// Hash over labels, ops, operands, literals and outputs.
  uint64_t fingerprint() const;

  bool operator==(const Dfg &O) const;
  bool operator!=(const Dfg &O) const { return !(*this == O); }
};

struct Violation {
  enum Kind {
    Cycle,
    Arity,
    Dangling,
    BadOutput,
    NoOutputs,
    DuplicateLabel,
  };
  Kind K;
  std::string Message;
};

Dfg parseDfg(std::string_view Text);
std::string serializeDfg(const Dfg &D);

/// Empty result means the graph is valid.
std::vector<Violation> validate(const Dfg &D);

std::vector<uint32_t> unsupportedNodes(const Dfg &D, const OpSet &Ops);
uint64_t cost(const Dfg &D, const OpSet &Ops);

/// Stable topological sort over distance-0 edges. Throws InvalidGraphError
/// on a distance-0 cycle.
Dfg topoSorted(const Dfg &D);

/// Drops nodes unreachable from the outputs, keeping relative order.
Dfg removeDead(const Dfg &D);

/// Label independent key of the graph reachable from the outputs, with
/// structurally identical subterms shared.
std::string structuralKey(const Dfg &D);

/// Convenience builder that assigns labels n0, n1, ...
class DfgBuilder {
public:
  uint32_t input(std::string Name);
  uint32_t constant(int32_t V);
  uint32_t fconstant(double V);
  uint32_t op(OpKind K, std::vector<Operand> Operands);
  uint32_t op(OpKind K, std::initializer_list<uint32_t> Operands);
  void output(uint32_t N) { G.Outputs.push_back(N); }
  /// Sorts and returns the graph; the builder is left empty.
  Dfg build();

private:
  uint32_t add(Node N);
  Dfg G;
};

} // namespace flexc

#endif // FLEXC_DFG_H
