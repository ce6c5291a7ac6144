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

//===- Op.h - Operation kinds and operation sets -----------------*- C++ -*-===//

#ifndef FLEXC_OP_H
#define FLEXC_OP_H

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flexc {

enum class OpKind : uint8_t {
  Add,
  Sub,
  Mul,
  Div,
  Shl,
  Shr,
  And,
  Or,
  Xor,
  Not,
  Neg,
  Eq,
  Ne,
  Lt,
  Gt,
  Le,
  Ge,
  Select,
  Load,
  Store,
  Const,
  Input,
  FAdd,
  FSub,
  FMul,
  FDiv,
  FNeg,
  FConst,
  IscMul,
};

constexpr unsigned NumOpKinds = 29;

enum class OpClass : uint8_t { Integer, Float, Memory, Control };

struct OpInfo {
  std::string_view Name;
  unsigned Arity;
  OpClass Class;
};

const OpInfo &opInfo(OpKind K);
inline std::string_view opName(OpKind K) { return opInfo(K).Name; }
inline unsigned opArity(OpKind K) { return opInfo(K).Arity; }
std::optional<OpKind> opFromName(std::string_view Name);

/// Leaves carry a literal or an input name and never occupy a PE.
inline bool isLeafOp(OpKind K) {
  return K == OpKind::Const || K == OpKind::Input || K == OpKind::FConst;
}
inline bool isComparison(OpKind K) {
  return K >= OpKind::Eq && K <= OpKind::Ge;
}

class OpSet {
public:
  OpSet() = default;
  OpSet(std::initializer_list<OpKind> Kinds) {
    for (OpKind K : Kinds)
      insert(K);
  }

  void insert(OpKind K) { Bits.set(static_cast<unsigned>(K)); }
  void erase(OpKind K) { Bits.reset(static_cast<unsigned>(K)); }
  bool contains(OpKind K) const { return Bits.test(static_cast<unsigned>(K)); }
  size_t size() const { return Bits.count(); }
  bool empty() const { return Bits.none(); }

  OpSet &operator|=(const OpSet &O) {
    Bits |= O.Bits;
    return *this;
  }
  friend OpSet operator|(OpSet A, const OpSet &B) { return A |= B; }
  bool operator==(const OpSet &O) const { return Bits == O.Bits; }
  bool isSubsetOf(const OpSet &O) const { return (Bits & ~O.Bits).none(); }

  std::vector<OpKind> members() const;
  /// Comma separated names in enum order.
  std::string str() const;

  /// Parses "add,xor,cmp". `cmp` expands to all six comparisons.
  static OpSet parse(std::string_view Text);
  static OpSet all();

private:
  std::bitset<NumOpKinds> Bits;
};

} // namespace flexc

#endif // FLEXC_OP_H
