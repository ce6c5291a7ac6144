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

//===- MappingVerifier.cpp - Independent mapping checker ------------------===//
//
// Deliberately shares nothing with the scheduler: every property is checked
// directly on the Mapping, the graph and the architecture.
//
//===----------------------------------------------------------------------===//

#include "flexc/Mapper.h"

#include <map>
#include <set>

using namespace flexc;

namespace {

class Checker {
public:
  Checker(const Dfg &D, const CgraSpec &S, const Mapping &M)
      : D(D), S(S), M(M) {}

  std::vector<MappingViolation> run();

private:
  void report(MappingViolation::Kind K, std::string Msg) {
    Found.push_back({K, std::move(Msg)});
  }
  bool adjacentOrSame(unsigned From, unsigned To) const {
    if (From == To)
      return true;
    for (const auto &L : S.Links)
      if (L.first == From && L.second == To)
        return true;
    return false;
  }
  bool placed(uint32_t V) const {
    return V < M.Places.size() && M.Places[V].has_value() &&
           M.Places[V]->Pe < S.Pes.size();
  }
  void checkEdge(uint32_t C, uint32_t J);

  const Dfg &D;
  const CgraSpec &S;
  const Mapping &M;
  std::vector<MappingViolation> Found;
};

void Checker::checkEdge(uint32_t C, uint32_t J) {
  const Operand &Op = D.Nodes[C].Operands[J];
  const Node &Prod = D.Nodes[Op.Node];
  const Node &Cons = D.Nodes[C];
  std::string Name = Prod.Label + " -> " + Cons.Label;
  const Placement &P = *M.Places[Op.Node];
  const Placement &Q = *M.Places[C];
  long long Ready = (long long)P.Slot + 1;
  long long Use = (long long)Q.Slot + (long long)Op.Distance * M.Ii;
  if (Use < Ready) {
    report(MappingViolation::Dependence,
           Name + ": consumed in slot " + std::to_string(Use) +
               " before it is ready in slot " + std::to_string(Ready));
    return;
  }

  std::vector<Placement> Hops;
  auto It = M.Routes.find({C, J});
  if (It != M.Routes.end())
    Hops = It->second;

  unsigned At = P.Pe;
  long long Expected = Ready;
  for (const Placement &H : Hops) {
    if (H.Pe >= S.Pes.size()) {
      report(MappingViolation::Routing, Name + ": hop on unknown PE");
      return;
    }
    if (H.Slot != Expected) {
      report(MappingViolation::Routing,
             Name + ": hop in slot " + std::to_string(H.Slot) + ", expected " +
                 std::to_string(Expected));
      return;
    }
    if (!S.Pes[H.Pe].HasRegister) {
      report(MappingViolation::Routing,
             Name + ": hop through PE " + std::to_string(H.Pe) +
                 " which has no register");
      return;
    }
    if (!adjacentOrSame(At, H.Pe)) {
      report(MappingViolation::Routing,
             Name + ": PE " + std::to_string(At) + " is not linked to PE " +
                 std::to_string(H.Pe));
      return;
    }
    At = H.Pe;
    ++Expected;
  }
  if (Expected != Use) {
    report(MappingViolation::Routing,
           Name + ": route delivers in slot " + std::to_string(Expected) +
               " but the value is used in slot " + std::to_string(Use));
    return;
  }
  if (!adjacentOrSame(At, Q.Pe))
    report(MappingViolation::Routing,
           Name + ": PE " + std::to_string(At) + " is not linked to PE " +
               std::to_string(Q.Pe));
}

std::vector<MappingViolation> Checker::run() {
  if (M.Ii == 0) {
    report(MappingViolation::BadIi, "II must be positive");
    return Found;
  }

  bool AllPlaced = true;
  std::map<std::pair<unsigned, unsigned>, uint32_t> Cells;
  for (uint32_t V = 0; V < D.size(); ++V) {
    const Node &N = D.Nodes[V];
    if (N.Op == OpKind::Const || N.Op == OpKind::FConst ||
        N.Op == OpKind::Input)
      continue;
    if (V >= M.Places.size() || !M.Places[V]) {
      report(MappingViolation::Unplaced, N.Label + " is not placed");
      AllPlaced = false;
      continue;
    }
    const Placement &P = *M.Places[V];
    if (P.Pe >= S.Pes.size()) {
      report(MappingViolation::UnknownPe,
             N.Label + " is on unknown PE " + std::to_string(P.Pe));
      AllPlaced = false;
      continue;
    }
    if (!S.Pes[P.Pe].Supported.contains(N.Op))
      report(MappingViolation::UnsupportedOp,
             N.Label + ": PE " + std::to_string(P.Pe) + " cannot execute " +
                 std::string(opName(N.Op)));
    auto [It, New] = Cells.insert({{P.Pe, P.Slot % M.Ii}, V});
    if (!New)
      report(MappingViolation::ResourceConflict,
             N.Label + " and " + D.Nodes[It->second].Label +
                 " share PE " + std::to_string(P.Pe) + " in slot " +
                 std::to_string(P.Slot % M.Ii) + " mod " +
                 std::to_string(M.Ii));
  }

  std::set<std::pair<uint32_t, uint32_t>> Edges;
  for (uint32_t C = 0; C < D.size(); ++C) {
    if (!placed(C))
      continue;
    for (uint32_t J = 0; J < D.Nodes[C].Operands.size(); ++J)
      if (placed(D.Nodes[C].Operands[J].Node)) {
        Edges.insert({C, J});
        checkEdge(C, J);
      }
  }
  if (AllPlaced)
    for (const auto &[Edge, Hops] : M.Routes)
      if (!Edges.count(Edge) && !Hops.empty())
        report(MappingViolation::Routing,
               "route for a nonexistent edge into node " +
                   std::to_string(Edge.first));
  return Found;
}

} // namespace

std::vector<MappingViolation> flexc::verifyMapping(const Dfg &D,
                                                   const CgraSpec &S,
                                                   const Mapping &M) {
  return Checker(D, S, M).run();
}
