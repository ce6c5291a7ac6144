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

//===- Value.h - Scalar runtime values ---------------------------*- C++ -*-===//

#ifndef FLEXC_VALUE_H
#define FLEXC_VALUE_H

#include <cstdint>
#include <string>
#include <variant>

namespace flexc {

/// A 32-bit wrapping integer, a binary64 float or a boolean.
class Value {
public:
  Value() : V(int32_t(0)) {}
  Value(int32_t I) : V(I) {}
  Value(double D) : V(D) {}
  Value(bool B) : V(B) {}

  static Value ofInt(int64_t I) { return Value(static_cast<int32_t>(I)); }

  bool isInt() const { return std::holds_alternative<int32_t>(V); }
  bool isFloat() const { return std::holds_alternative<double>(V); }
  bool isBool() const { return std::holds_alternative<bool>(V); }

  /// Integer view. Booleans read as 0/1. Throws EvalError on floats.
  int32_t asInt() const;
  /// Float view. Integers and booleans convert.
  double asFloat() const;
  bool truthy() const;

  /// Exact equality: same tag, same bits (NaNs compare equal to NaNs).
  bool operator==(const Value &O) const;
  bool operator!=(const Value &O) const { return !(*this == O); }

  std::string str() const;

private:
  std::variant<int32_t, double, bool> V;
};

} // namespace flexc

#endif // FLEXC_VALUE_H
