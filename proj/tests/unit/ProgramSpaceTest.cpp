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

//===- ProgramSpaceTest.cpp -----------------------------------------------===//

#include "flexc/Error.h"
#include "flexc/ProgramSpace.h"

#include <gtest/gtest.h>
#include <set>

using namespace flexc;

static ProgramSpace space(const char *Ops, unsigned MaxOps) {
  ProgramSpace S;
  S.Grammar = OpSet::parse(Ops);
  S.MaxOps = MaxOps;
  return S;
}

TEST(Enumerate, TinyAddGrammar) {
  // 2 leaves, 4 single adds, and for each single add t: t+a, a+t, t+b,
  // b+t, t+t.
  auto Ps = enumeratePrograms(space("add", 2));
  EXPECT_EQ(Ps.size(), 26u);
  std::set<std::string> Keys;
  for (const Dfg &D : Ps) {
    EXPECT_TRUE(validate(D).empty());
    EXPECT_LE(D.numOps(), 2u);
    Keys.insert(structuralKey(D));
  }
  EXPECT_EQ(Keys.size(), Ps.size());
}

TEST(Enumerate, Degenerate) {
  ProgramSpace Empty;
  Empty.MaxOps = 3;
  auto Ps = enumeratePrograms(Empty);
  EXPECT_EQ(Ps.size(), 2u);
  for (const Dfg &D : Ps)
    EXPECT_EQ(D.numOps(), 0u);
  EXPECT_EQ(enumeratePrograms(space("add,mul", 0)).size(), 2u);
}

TEST(Enumerate, UnaryAndConstants) {
  ProgramSpace S = space("neg", 2);
  S.NumInputs = 1;
  S.Constants = {7};
  // a, 7, -a, -7, --a, --7
  EXPECT_EQ(enumeratePrograms(S).size(), 6u);
}

TEST(Enumerate, SizeBoundEnforced) {
  EXPECT_THROW(enumeratePrograms(space("add", MaxEnumeratedOps + 1)), Error);
}

TEST(Sample, DeterministicAndInRange) {
  ProgramSpace S = space("add,sub,mul,neg,xor,shl", 5);
  auto A = samplePrograms(S, 3, 50, 9);
  auto B = samplePrograms(S, 3, 50, 9);
  ASSERT_EQ(A.size(), B.size());
  std::set<std::string> Keys;
  for (size_t I = 0; I < A.size(); ++I) {
    EXPECT_EQ(A[I], B[I]);
    EXPECT_TRUE(validate(A[I]).empty());
    EXPECT_GE(A[I].numOps(), 3u);
    EXPECT_LE(A[I].numOps(), 5u);
    Keys.insert(structuralKey(A[I]));
  }
  EXPECT_EQ(Keys.size(), A.size());
  EXPECT_NE(serializeDfg(samplePrograms(S, 3, 1, 10)[0]),
            serializeDfg(A[0]));
}
