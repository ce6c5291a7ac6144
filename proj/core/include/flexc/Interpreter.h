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

//===- Interpreter.h - Reference semantics for dataflow graphs ---*- C++ -*-===//

#ifndef FLEXC_INTERPRETER_H
#define FLEXC_INTERPRETER_H

#include "flexc/Dfg.h"
#include "flexc/Value.h"

#include <map>
#include <string>
#include <vector>

namespace flexc {

using Env = std::map<std::string, Value>;
using Memory = std::map<int32_t, Value>;

struct EvalResult {
  /// One value per entry of Dfg::Outputs.
  std::vector<Value> Outputs;
  /// Values written by store nodes, in node order.
  Memory Stores;
};

/// Evaluates one iteration. Loads read \p Mem (unset addresses read 0),
/// stores are collected separately so the result does not depend on node
/// order. Carried operands read \p Carried keyed by producer label, or 0.
EvalResult interpret(const Dfg &D, const Env &Inputs, const Memory &Mem = {},
                     const std::map<std::string, Value> &Carried = {});

/// Applies a single operation. Exposed for the e-graph and tests.
Value evalOp(OpKind K, const std::vector<Value> &Args);

} // namespace flexc

#endif // FLEXC_INTERPRETER_H
