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

//===- ProgramSpace.cpp ---------------------------------------------------===//

#include "flexc/ProgramSpace.h"
#include "flexc/Error.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

using namespace flexc;

namespace {

// Hash-consed terms; a term id identifies a program up to structure.
class TermTable {
public:
  struct Term {
    OpKind Op;
    std::vector<uint32_t> Kids;
    int32_t Imm = 0;
    std::string Name;
    std::vector<uint32_t> OpNodes; // sorted, includes the term itself
  };

  uint32_t leaf(OpKind Op, int32_t Imm, std::string Name) {
    return intern(Term{Op, {}, Imm, std::move(Name), {}});
  }

  uint32_t op(OpKind Op, std::vector<uint32_t> Kids) {
    Term T{Op, std::move(Kids), 0, "", {}};
    for (uint32_t K : T.Kids)
      T.OpNodes.insert(T.OpNodes.end(), Terms[K].OpNodes.begin(),
                       Terms[K].OpNodes.end());
    std::sort(T.OpNodes.begin(), T.OpNodes.end());
    T.OpNodes.erase(std::unique(T.OpNodes.begin(), T.OpNodes.end()),
                    T.OpNodes.end());
    uint32_t Id = intern(std::move(T));
    auto &Nodes = Terms[Id].OpNodes;
    if (!std::binary_search(Nodes.begin(), Nodes.end(), Id))
      Nodes.insert(std::upper_bound(Nodes.begin(), Nodes.end(), Id), Id);
    return Id;
  }

  /// Number of distinct operation nodes the program would contain.
  size_t sizeWith(const std::vector<uint32_t> &Kids) const {
    std::vector<uint32_t> All;
    for (uint32_t K : Kids)
      All.insert(All.end(), Terms[K].OpNodes.begin(), Terms[K].OpNodes.end());
    std::sort(All.begin(), All.end());
    return std::unique(All.begin(), All.end()) - All.begin() + 1;
  }

  const Term &operator[](uint32_t Id) const { return Terms[Id]; }

  Dfg toDfg(uint32_t Root) const {
    DfgBuilder B;
    std::map<uint32_t, uint32_t> Built;
    std::vector<std::pair<uint32_t, bool>> Stack{{Root, false}};
    while (!Stack.empty()) {
      auto [Id, Expanded] = Stack.back();
      Stack.pop_back();
      if (Built.count(Id))
        continue;
      const Term &T = Terms[Id];
      if (!Expanded && !T.Kids.empty()) {
        Stack.push_back({Id, true});
        for (auto It = T.Kids.rbegin(); It != T.Kids.rend(); ++It)
          Stack.push_back({*It, false});
        continue;
      }
      uint32_t N;
      if (T.Op == OpKind::Input)
        N = B.input(T.Name);
      else if (T.Op == OpKind::Const)
        N = B.constant(T.Imm);
      else {
        std::vector<Operand> Ops;
        for (uint32_t K : T.Kids)
          Ops.push_back({Built.at(K), 0});
        N = B.op(T.Op, std::move(Ops));
      }
      Built[Id] = N;
    }
    B.output(Built.at(Root));
    return B.build();
  }

private:
  using Key = std::tuple<OpKind, std::vector<uint32_t>, int32_t, std::string>;

  uint32_t intern(Term T) {
    Key K{T.Op, T.Kids, T.Imm, T.Name};
    auto It = Index.find(K);
    if (It != Index.end())
      return It->second;
    uint32_t Id = Terms.size();
    Terms.push_back(std::move(T));
    Index.emplace(std::move(K), Id);
    return Id;
  }

  std::vector<Term> Terms;
  std::map<Key, uint32_t> Index;
};

std::vector<uint32_t> addLeaves(TermTable &T, const ProgramSpace &S) {
  std::vector<uint32_t> Leaves;
  for (unsigned I = 0; I < S.NumInputs; ++I)
    Leaves.push_back(T.leaf(OpKind::Input, 0, std::string(1, char('a' + I))));
  for (int32_t C : S.Constants)
    Leaves.push_back(T.leaf(OpKind::Const, C, ""));
  return Leaves;
}

std::vector<OpKind> grammarOps(const ProgramSpace &S) {
  std::vector<OpKind> Ops;
  for (OpKind K : S.Grammar.members())
    if (!isLeafOp(K))
      Ops.push_back(K);
  return Ops;
}

} // namespace

std::vector<Dfg> flexc::enumeratePrograms(const ProgramSpace &S) {
  if (S.MaxOps > MaxEnumeratedOps)
    throw Error("program space bound " + std::to_string(S.MaxOps) +
                " exceeds the enumeration limit of " +
                std::to_string(MaxEnumeratedOps));
  if (S.NumInputs > 26)
    throw Error("at most 26 inputs are supported");
  TermTable T;
  std::vector<std::vector<uint32_t>> BySize(S.MaxOps + 1);
  BySize[0] = addLeaves(T, S);
  std::vector<OpKind> Ops = grammarOps(S);

  std::vector<uint32_t> Pool = BySize[0];
  for (unsigned Size = 1; Size <= S.MaxOps; ++Size) {
    for (OpKind K : Ops) {
      unsigned Arity = opArity(K);
      std::vector<size_t> Pick(Arity, 0);
      if (Pool.empty())
        break;
      // Odometer over Pool^Arity.
      while (true) {
        std::vector<uint32_t> Kids;
        for (size_t P : Pick)
          Kids.push_back(Pool[P]);
        if (T.sizeWith(Kids) == Size)
          BySize[Size].push_back(T.op(K, std::move(Kids)));
        size_t D = 0;
        while (D < Arity && ++Pick[D] == Pool.size())
          Pick[D++] = 0;
        if (D == Arity)
          break;
      }
    }
    Pool.insert(Pool.end(), BySize[Size].begin(), BySize[Size].end());
  }

  std::vector<Dfg> Out;
  for (const auto &Level : BySize)
    for (uint32_t Id : Level)
      Out.push_back(T.toDfg(Id));
  return Out;
}

std::vector<Dfg> flexc::samplePrograms(const ProgramSpace &S, unsigned MinOps,
                                       size_t Count, uint64_t Seed) {
  if (S.NumInputs > 26)
    throw Error("at most 26 inputs are supported");
  std::vector<OpKind> Ops = grammarOps(S);
  TermTable T;
  std::vector<uint32_t> Leaves = addLeaves(T, S);
  std::vector<Dfg> Out;
  if (Ops.empty() || Leaves.empty() || MinOps > S.MaxOps)
    return Out;

  std::mt19937_64 Rng(Seed);
  std::set<uint32_t> Seen;
  size_t Attempts = 0;
  while (Out.size() < Count && Attempts++ < Count * 100) {
    unsigned Target = std::uniform_int_distribution<unsigned>(
        std::max(1u, MinOps), S.MaxOps)(Rng);
    std::vector<uint32_t> Pool = Leaves;
    uint32_t Root = Leaves[0];
    for (unsigned I = 0; I < Target; ++I) {
      OpKind K = Ops[std::uniform_int_distribution<size_t>(0, Ops.size() - 1)(
          Rng)];
      std::vector<uint32_t> Kids;
      for (unsigned J = 0; J < opArity(K); ++J) {
        // Favour the newest node so most draws build one connected term.
        bool Newest = J == 0 && I > 0 &&
                      std::bernoulli_distribution(0.75)(Rng);
        Kids.push_back(Newest ? Pool.back()
                              : Pool[std::uniform_int_distribution<size_t>(
                                    0, Pool.size() - 1)(Rng)]);
      }
      if (Kids.size() == 2 && std::bernoulli_distribution(0.5)(Rng))
        std::swap(Kids[0], Kids[1]);
      Root = T.op(K, std::move(Kids));
      Pool.push_back(Root);
    }
    size_t Size = T[Root].OpNodes.size();
    if (Size < MinOps || Size > S.MaxOps || !Seen.insert(Root).second)
      continue;
    Out.push_back(T.toDfg(Root));
  }
  return Out;
}
