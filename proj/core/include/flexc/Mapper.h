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

//===- Mapper.h - Modulo scheduling onto a CGRA ------------------*- C++ -*-===//
//
// Timing model: every operation takes one cycle and a value produced in slot
// t can be consumed in slot t + 1 by a PE on the same position or linked from
// the producer. Longer distances are covered by route hops, each holding the
// value for one slot in the register of a PE. Routing capacity is unlimited;
// only operations compete for (PE, slot mod II) cells. Leaves (constants and
// inputs) are not placed.
//
//===----------------------------------------------------------------------===//

#ifndef FLEXC_MAPPER_H
#define FLEXC_MAPPER_H

#include "flexc/Cgra.h"
#include "flexc/Dfg.h"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flexc {

struct Placement {
  unsigned Pe = 0;
  unsigned Slot = 0;
  bool operator==(const Placement &O) const {
    return Pe == O.Pe && Slot == O.Slot;
  }
};

/// (consumer node, operand index).
using EdgeRef = std::pair<uint32_t, uint32_t>;

struct Mapping {
  unsigned Ii = 1;
  /// Indexed by node; empty for leaves.
  std::vector<std::optional<Placement>> Places;
  /// Hops in slot order for every edge between two placed nodes.
  std::map<EdgeRef, std::vector<Placement>> Routes;

  /// Last occupied operation slot + 1; 0 for an empty mapping.
  unsigned scheduleLength() const;
};

unsigned resMii(const Dfg &D, const CgraSpec &S);
unsigned recMii(const Dfg &D);

struct MapBudget {
  uint64_t Steps = 2'000'000;
  double Seconds = 10.0;
};

enum class MapStatus { Success, Infeasible, BudgetExhausted };
std::string_view mapStatusName(MapStatus S);

struct MapResult {
  MapStatus Status = MapStatus::BudgetExhausted;
  std::optional<Mapping> Map;
  uint64_t Steps = 0;
};

/// Backtracking search for a mapping at a fixed II. Infeasible is reported
/// only when the search space was explored completely.
MapResult mapAt(const Dfg &D, const CgraSpec &S, unsigned Ii,
                const MapBudget &Budget = {});

struct CompileResult {
  std::optional<Mapping> Map;
  unsigned ResMii = 1, RecMii = 1;
  /// The II of the returned mapping, or the last II attempted.
  unsigned Ii = 1;
  MapStatus LastStatus = MapStatus::Success;
};

/// Tries increasing II from the lower bound. Throws UnsupportedOpError if
/// some operation has no capable PE.
CompileResult compile(const Dfg &D, const CgraSpec &S,
                      const MapBudget &PerIi = {});

uint64_t estimateCycles(const Mapping &M, uint64_t Iterations);

/// Text form: one "node" row per placed node and one "route" row per edge
/// with hops.
std::string printMapping(const Dfg &D, const CgraSpec &S, const Mapping &M);

struct MappingViolation {
  enum Kind {
    BadIi,
    Unplaced,
    UnknownPe,
    UnsupportedOp,
    ResourceConflict,
    Dependence,
    Routing,
  };
  Kind K;
  std::string Message;
};

/// Checks a mapping against the timing model from scratch.
std::vector<MappingViolation> verifyMapping(const Dfg &D, const CgraSpec &S,
                                            const Mapping &M);

} // namespace flexc

#endif // FLEXC_MAPPER_H
