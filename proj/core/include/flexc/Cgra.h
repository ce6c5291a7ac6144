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

//===- Cgra.h - CGRA architecture description --------------------*- C++ -*-===//
//
// JSON schema:
//
//   { "name": str, "note": str (optional), "rows": int, "cols": int,
//     "pes": [ { "row": int, "col": int, "ops": [str...],
//                "has_register": bool (default true) } ... ],
//     "links": [ [src, dst] ... ] (optional, PE indices) }
//
// Without "links" every PE is linked in both directions to its north, south,
// east and west neighbours.
//
//===----------------------------------------------------------------------===//

#ifndef FLEXC_CGRA_H
#define FLEXC_CGRA_H

#include "flexc/Op.h"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flexc {

struct ProcessingElement {
  unsigned Id = 0;
  unsigned Row = 0, Col = 0;
  OpSet Supported;
  bool HasRegister = true;

  bool operator==(const ProcessingElement &O) const {
    return Id == O.Id && Row == O.Row && Col == O.Col &&
           Supported == O.Supported && HasRegister == O.HasRegister;
  }
};

struct CgraSpec {
  std::string Name;
  /// Free-form provenance text.
  std::string Note;
  unsigned Rows = 0, Cols = 0;
  std::vector<ProcessingElement> Pes;
  /// Directed (src, dst) PE index pairs, sorted and unique.
  std::vector<std::pair<unsigned, unsigned>> Links;

  bool linked(unsigned From, unsigned To) const;
  bool operator==(const CgraSpec &O) const {
    return Name == O.Name && Note == O.Note && Rows == O.Rows &&
           Cols == O.Cols && Pes == O.Pes && Links == O.Links;
  }
};

CgraSpec parseArch(std::string_view Json);
std::string serializeArch(const CgraSpec &S);
OpSet supportedOps(const CgraSpec &S);

/// Links of a rows x cols 4-neighbour mesh over PEs in row-major order.
std::vector<std::pair<unsigned, unsigned>> meshLinks(const CgraSpec &S);

/// A rows x cols grid where every PE supports \p Ops.
CgraSpec homogeneousArch(std::string Name, unsigned Rows, unsigned Cols,
                         const OpSet &Ops);

std::string_view builtinArchText(std::string_view Name);
CgraSpec builtinArch(std::string_view Name);
const std::vector<std::string> &builtinArchNames();

} // namespace flexc

#endif // FLEXC_CGRA_H
