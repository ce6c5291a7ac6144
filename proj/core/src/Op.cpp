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

//===- Op.cpp - Operation table -------------------------------------------===//

#include "flexc/Op.h"
#include "flexc/Error.h"

#include <array>

using namespace flexc;

static constexpr std::array<OpInfo, NumOpKinds> OpTable = {{
    {"add", 2, OpClass::Integer},    {"sub", 2, OpClass::Integer},
    {"mul", 2, OpClass::Integer},    {"div", 2, OpClass::Integer},
    {"shl", 2, OpClass::Integer},    {"shr", 2, OpClass::Integer},
    {"and", 2, OpClass::Integer},    {"or", 2, OpClass::Integer},
    {"xor", 2, OpClass::Integer},    {"not", 1, OpClass::Integer},
    {"neg", 1, OpClass::Integer},    {"eq", 2, OpClass::Integer},
    {"ne", 2, OpClass::Integer},     {"lt", 2, OpClass::Integer},
    {"gt", 2, OpClass::Integer},     {"le", 2, OpClass::Integer},
    {"ge", 2, OpClass::Integer},     {"select", 3, OpClass::Control},
    {"load", 1, OpClass::Memory},    {"store", 2, OpClass::Memory},
    {"const", 0, OpClass::Integer},  {"input", 0, OpClass::Control},
    {"fadd", 2, OpClass::Float},     {"fsub", 2, OpClass::Float},
    {"fmul", 2, OpClass::Float},     {"fdiv", 2, OpClass::Float},
    {"fneg", 1, OpClass::Float},     {"fconst", 0, OpClass::Float},
    {"isc_mul", 2, OpClass::Integer},
}};

const OpInfo &flexc::opInfo(OpKind K) {
  return OpTable[static_cast<unsigned>(K)];
}

std::optional<OpKind> flexc::opFromName(std::string_view Name) {
  for (unsigned I = 0; I < NumOpKinds; ++I)
    if (OpTable[I].Name == Name)
      return static_cast<OpKind>(I);
  return std::nullopt;
}

std::vector<OpKind> OpSet::members() const {
  std::vector<OpKind> Out;
  for (unsigned I = 0; I < NumOpKinds; ++I)
    if (Bits.test(I))
      Out.push_back(static_cast<OpKind>(I));
  return Out;
}

std::string OpSet::str() const {
  std::string S;
  for (OpKind K : members()) {
    if (!S.empty())
      S += ',';
    S += opName(K);
  }
  return S;
}

OpSet OpSet::parse(std::string_view Text) {
  OpSet Set;
  size_t Pos = 0;
  while (Pos <= Text.size()) {
    size_t Comma = Text.find(',', Pos);
    if (Comma == std::string_view::npos)
      Comma = Text.size();
    std::string_view Tok = Text.substr(Pos, Comma - Pos);
    while (!Tok.empty() && Tok.front() == ' ')
      Tok.remove_prefix(1);
    while (!Tok.empty() && Tok.back() == ' ')
      Tok.remove_suffix(1);
    if (Tok == "cmp") {
      for (OpKind K : {OpKind::Eq, OpKind::Ne, OpKind::Lt, OpKind::Gt,
                       OpKind::Le, OpKind::Ge})
        Set.insert(K);
    } else if (!Tok.empty()) {
      auto K = opFromName(Tok);
      if (!K)
        throw UnknownNameError("unknown op '" + std::string(Tok) + "'");
      Set.insert(*K);
    }
    Pos = Comma + 1;
  }
  return Set;
}

OpSet OpSet::all() {
  OpSet S;
  S.Bits.set();
  return S;
}
