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

//===- Interpreter.cpp ----------------------------------------------------===//

#include "flexc/Interpreter.h"
#include "flexc/Error.h"

#include <climits>

using namespace flexc;

static int32_t wrap(uint32_t U) { return static_cast<int32_t>(U); }

static uint32_t shiftAmount(const Value &V) {
  int32_t S = V.asInt();
  if (S < 0 || S > 31)
    throw EvalError(EvalError::ShiftOutOfRange,
                    "shift amount " + std::to_string(S) + " outside 0..31");
  return static_cast<uint32_t>(S);
}

Value flexc::evalOp(OpKind K, const std::vector<Value> &A) {
  auto U = [&](size_t I) { return static_cast<uint32_t>(A[I].asInt()); };
  auto S = [&](size_t I) { return A[I].asInt(); };
  auto F = [&](size_t I) { return A[I].asFloat(); };
  switch (K) {
  case OpKind::Add:
    return wrap(U(0) + U(1));
  case OpKind::Sub:
    return wrap(U(0) - U(1));
  case OpKind::Mul:
  case OpKind::IscMul:
    return wrap(U(0) * U(1));
  case OpKind::Div: {
    int32_t L = S(0), R = S(1);
    if (R == 0)
      throw EvalError(EvalError::DivByZero, "integer division by zero");
    if (L == INT32_MIN && R == -1)
      return L;
    return L / R;
  }
  case OpKind::Shl:
    return wrap(U(0) << shiftAmount(A[1]));
  case OpKind::Shr:
    return wrap(U(0) >> shiftAmount(A[1]));
  case OpKind::And:
    return wrap(U(0) & U(1));
  case OpKind::Or:
    return wrap(U(0) | U(1));
  case OpKind::Xor:
    return wrap(U(0) ^ U(1));
  case OpKind::Not:
    return wrap(~U(0));
  case OpKind::Neg:
    return wrap(0u - U(0));
  case OpKind::Eq:
    return int32_t(S(0) == S(1));
  case OpKind::Ne:
    return int32_t(S(0) != S(1));
  case OpKind::Lt:
    return int32_t(S(0) < S(1));
  case OpKind::Gt:
    return int32_t(S(0) > S(1));
  case OpKind::Le:
    return int32_t(S(0) <= S(1));
  case OpKind::Ge:
    return int32_t(S(0) >= S(1));
  case OpKind::Select:
    return A[0].truthy() ? A[1] : A[2];
  case OpKind::FAdd:
    return F(0) + F(1);
  case OpKind::FSub:
    return F(0) - F(1);
  case OpKind::FMul:
    return F(0) * F(1);
  case OpKind::FDiv:
    return F(0) / F(1);
  case OpKind::FNeg:
    return -F(0);
  case OpKind::Load:
  case OpKind::Store:
  case OpKind::Const:
  case OpKind::Input:
  case OpKind::FConst:
    break;
  }
  throw Error("evalOp: " + std::string(opName(K)) + " needs graph context");
}

EvalResult flexc::interpret(const Dfg &D, const Env &Inputs, const Memory &Mem,
                            const std::map<std::string, Value> &Carried) {
  std::vector<Value> Vals(D.Nodes.size());
  EvalResult R;
  std::vector<Value> Args;
  for (size_t I = 0; I < D.Nodes.size(); ++I) {
    const Node &N = D.Nodes[I];
    Args.clear();
    for (const Operand &O : N.Operands) {
      if (O.Distance == 0) {
        if (O.Node >= I)
          throw InvalidGraphError("interpret: graph not in topological order");
        Args.push_back(Vals[O.Node]);
        continue;
      }
      auto It = Carried.find(D.Nodes[O.Node].Label);
      Args.push_back(It == Carried.end() ? Value(int32_t(0)) : It->second);
    }
    switch (N.Op) {
    case OpKind::Const:
      Vals[I] = N.Imm;
      break;
    case OpKind::FConst:
      Vals[I] = N.FImm;
      break;
    case OpKind::Input: {
      auto It = Inputs.find(N.Name);
      if (It == Inputs.end())
        throw EvalError(EvalError::UnboundInput,
                        "input '" + N.Name + "' is not bound");
      Vals[I] = It->second;
      break;
    }
    case OpKind::Load: {
      auto It = Mem.find(Args[0].asInt());
      Vals[I] = It == Mem.end() ? Value(int32_t(0)) : It->second;
      break;
    }
    case OpKind::Store:
      R.Stores[Args[0].asInt()] = Args[1];
      Vals[I] = Args[1];
      break;
    default:
      Vals[I] = evalOp(N.Op, Args);
    }
  }
  for (uint32_t O : D.Outputs)
    R.Outputs.push_back(Vals[O]);
  return R;
}
