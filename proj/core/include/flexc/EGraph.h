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

//===- EGraph.h - Hashconsed e-graph with congruence closure -----*- C++ -*-===//

#ifndef FLEXC_EGRAPH_H
#define FLEXC_EGRAPH_H

#include "flexc/Dfg.h"
#include "flexc/Pattern.h"

#include <array>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <span>
#include <vector>

namespace flexc {

using ClassId = uint32_t;

/// An operation over e-class children. Lit holds the const value, the bit
/// pattern of an fconst, or the interned symbol of an input.
struct ENode {
  OpKind Op = OpKind::Const;
  uint8_t NumKids = 0;
  int64_t Lit = 0;
  std::array<ClassId, 3> Kids{};

  static ENode leaf(OpKind K, int64_t Lit) {
    ENode N;
    N.Op = K;
    N.Lit = Lit;
    return N;
  }
  static ENode op(OpKind K, std::initializer_list<ClassId> Children);

  bool operator==(const ENode &O) const {
    return Op == O.Op && NumKids == O.NumKids && Lit == O.Lit &&
           Kids == O.Kids;
  }
  bool operator<(const ENode &O) const;
};

struct ENodeHash {
  size_t operator()(const ENode &N) const;
};

struct EClass {
  std::vector<ENode> Nodes;
  std::vector<std::pair<ENode, ClassId>> Parents;
};

/// A loop-carried operand: the previous-iteration value of Producer.
struct CarrySlot {
  ClassId Producer;
  uint32_t Distance;
};

class EGraph {
public:
  ClassId add(ENode N);
  ClassId find(ClassId C) const;
  /// Unions two classes; congruence is restored by rebuild().
  ClassId merge(ClassId A, ClassId B);
  void rebuild();
  bool isClean() const { return Pending.empty(); }

  ENode canonicalize(ENode N) const;
  std::optional<ClassId> lookup(ENode N) const;

  const EClass &eclass(ClassId C) const { return Classes[find(C)]; }
  /// Canonical class ids in ascending order.
  std::vector<ClassId> classIds() const;
  size_t classCount() const { return NumClasses; }
  size_t nodeCount() const { return NumNodes; }
  /// Total number of classes ever created, canonical or not.
  size_t idBound() const { return Classes.size(); }
  unsigned rank(ClassId C) const { return Rank[find(C)]; }
  size_t rankIncreases() const { return RankIncreases; }

  int64_t internSymbol(const std::string &Name);
  const std::string &symbol(int64_t Id) const { return Symbols[Id]; }
  /// Carry slot index for an input leaf symbol, or -1.
  int carrySlotOf(int64_t Symbol) const;
  ClassId addCarry(uint32_t Distance);
  std::vector<CarrySlot> &carries() { return Carries; }
  const std::vector<CarrySlot> &carries() const { return Carries; }

  /// Output classes, parallel to the source Dfg's outputs.
  std::vector<ClassId> Roots;
  /// (class, node) for each node of the source Dfg in its order.
  std::vector<std::pair<ClassId, ENode>> Origins;

  /// Checks hashcons, node count and congruence. Requires a clean graph.
  bool checkInvariants(std::string *Why = nullptr) const;
  void dump(std::ostream &OS) const;

private:
  mutable std::vector<ClassId> Parent;
  std::vector<unsigned> Rank;
  std::vector<EClass> Classes;
  std::unordered_map<ENode, ClassId, ENodeHash> Memo;
  std::vector<std::pair<ENode, ClassId>> Pending;
  std::vector<std::string> Symbols;
  std::unordered_map<std::string, int64_t> SymbolIds;
  std::vector<int> SymbolCarry;
  std::vector<CarrySlot> Carries;
  size_t NumNodes = 0;
  size_t NumClasses = 0;
  size_t RankIncreases = 0;
};

/// One class per structurally distinct subterm of \p D.
EGraph egraphInit(const Dfg &D);

/// Matches stored back to back: the roots of a match, one per pattern
/// output, followed by its substitution.
class MatchSet {
public:
  MatchSet(size_t NumRoots, size_t NumVars)
      : NumRoots(NumRoots), Stride(NumRoots + NumVars) {}

  size_t size() const { return Count; }
  bool empty() const { return size() == 0; }
  std::span<const ClassId> roots(size_t I) const {
    return {Data.data() + I * Stride, NumRoots};
  }
  std::span<const ClassId> subst(size_t I) const {
    return {Data.data() + I * Stride + NumRoots, Stride - NumRoots};
  }
  void push(std::span<const ClassId> Roots, std::span<const ClassId> Subst) {
    Data.insert(Data.end(), Roots.begin(), Roots.end());
    Data.insert(Data.end(), Subst.begin(), Subst.end());
    ++Count;
  }

private:
  size_t NumRoots, Stride;
  size_t Count = 0;
  std::vector<ClassId> Data;
};

/// All (roots, substitution) pairs under which some represented term matches
/// \p P, in class order. \p G must be clean. Returns early (incomplete) once
/// the deadline passes, setting \p TimedOut.
MatchSet
ematch(const EGraph &G, const Pattern &P, size_t NumVars,
       std::optional<std::chrono::steady_clock::time_point> Deadline = {},
       bool *TimedOut = nullptr);

/// Adds the pattern instantiated under \p Subst; returns one class per
/// pattern output.
std::vector<ClassId> instantiate(EGraph &G, const Pattern &P,
                                 std::span<const ClassId> Subst);

ENode patternLeaf(const PatNode &N);

} // namespace flexc

#endif // FLEXC_EGRAPH_H
