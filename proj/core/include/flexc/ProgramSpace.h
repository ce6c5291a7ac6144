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

//===- ProgramSpace.h - Small program enumeration ----------------*- C++ -*-===//
//
// Programs are single-output DAGs with maximal sharing: two programs are the
// same exactly when their structural keys agree. Size is the number of
// distinct operation nodes.
//
//===----------------------------------------------------------------------===//

#ifndef FLEXC_PROGRAMSPACE_H
#define FLEXC_PROGRAMSPACE_H

#include "flexc/Dfg.h"

#include <cstdint>
#include <vector>

namespace flexc {

struct ProgramSpace {
  /// Operations the generator may use; leaf kinds are ignored.
  OpSet Grammar;
  unsigned MaxOps = 2;
  /// Inputs are named a, b, c, ...
  unsigned NumInputs = 2;
  /// Integer constants available as extra leaves.
  std::vector<int32_t> Constants;
};

constexpr unsigned MaxEnumeratedOps = 6;

/// Every program of the space, ordered by size and then by construction.
/// Throws Error when MaxOps exceeds MaxEnumeratedOps.
std::vector<Dfg> enumeratePrograms(const ProgramSpace &S);

/// Up to \p Count distinct random programs with between \p MinOps and
/// S.MaxOps operations. Deterministic for a given seed.
std::vector<Dfg> samplePrograms(const ProgramSpace &S, unsigned MinOps,
                                size_t Count, uint64_t Seed);

} // namespace flexc

#endif // FLEXC_PROGRAMSPACE_H
