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

//===- Value.cpp ----------------------------------------------------------===//

#include "flexc/Value.h"
#include "flexc/Error.h"

#include <cmath>
#include <cstring>
#include <cstdio>

using namespace flexc;

int32_t Value::asInt() const {
  if (auto *I = std::get_if<int32_t>(&V))
    return *I;
  if (auto *B = std::get_if<bool>(&V))
    return *B ? 1 : 0;
  throw EvalError(EvalError::TypeMismatch, "float value used as integer");
}

double Value::asFloat() const {
  if (auto *D = std::get_if<double>(&V))
    return *D;
  if (auto *I = std::get_if<int32_t>(&V))
    return *I;
  return std::get<bool>(V) ? 1.0 : 0.0;
}

bool Value::truthy() const {
  if (auto *D = std::get_if<double>(&V))
    return *D != 0.0;
  return asInt() != 0;
}

bool Value::operator==(const Value &O) const {
  if (V.index() != O.V.index())
    return false;
  if (isFloat()) {
    double A = std::get<double>(V), B = std::get<double>(O.V);
    if (std::isnan(A) || std::isnan(B))
      return std::isnan(A) && std::isnan(B);
    return std::memcmp(&A, &B, sizeof(double)) == 0;
  }
  return V == O.V;
}

std::string Value::str() const {
  if (isInt())
    return std::to_string(std::get<int32_t>(V));
  if (isBool())
    return std::get<bool>(V) ? "true" : "false";
  char Buf[40];
  std::snprintf(Buf, sizeof(Buf), "%.17g", std::get<double>(V));
  return Buf;
}
