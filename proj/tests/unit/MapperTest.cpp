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

//===- MapperTest.cpp -----------------------------------------------------===//

#include "Generators.h"
#include "Oracles.h"

#include "flexc/Error.h"
#include "flexc/Mapper.h"

#include <gtest/gtest.h>

using namespace flexc;

static Dfg chain(unsigned Ops, const char *Op = "add") {
  std::string T = "a input a\n";
  std::string Prev = "a";
  for (unsigned I = 0; I < Ops; ++I) {
    std::string L = "o" + std::to_string(I);
    T += L + " " + Op + " " + Prev + " a\n";
    Prev = L;
  }
  return parseDfg(T + "out " + Prev + "\n");
}

static Dfg parallelMuls(unsigned N) {
  std::string T = "a input a\nb input b\n";
  for (unsigned I = 0; I < N; ++I)
    T += "m" + std::to_string(I) + " mul a b\nout m" + std::to_string(I) +
         "\n";
  return parseDfg(T);
}

static CgraSpec onePe(const OpSet &Ops) {
  return homogeneousArch("one", 1, 1, Ops);
}

TEST(ResMii, Bounds) {
  CgraSpec S = homogeneousArch("g", 2, 2, {OpKind::Add});
  S.Pes[0].Supported.insert(OpKind::Mul);
  EXPECT_EQ(resMii(parallelMuls(5), S), 5u);
  EXPECT_EQ(resMii(chain(4), homogeneousArch("g", 2, 2, {OpKind::Add})), 1u);
}

TEST(RecMii, Cycles) {
  EXPECT_EQ(recMii(chain(3)), 1u);
  Dfg Acc = parseDfg("x input x\nacc add acc x\ndist acc acc 1\nout acc");
  EXPECT_EQ(recMii(Acc), 1u);
  Dfg Three = parseDfg("x input x\np add r x\nq mul p x\nr xor q x\n"
                       "dist r p 1\nout r");
  EXPECT_EQ(recMii(Three), 3u);
  EXPECT_EQ(oracle::cycleRecMii(Three), 3u);
  Dfg Two = parseDfg("x input x\np add r x\nq mul p x\nr xor q x\n"
                     "dist r p 2\nout r");
  EXPECT_EQ(recMii(Two), 2u);
}

TEST(RecMiiProperty, MatchesCycleEnumeration) {
  std::mt19937_64 Rng(31);
  for (int I = 0; I < 300; ++I) {
    Dfg D = oracle::randomKernel(Rng, 9);
    EXPECT_EQ(recMii(D), oracle::cycleRecMii(D)) << serializeDfg(D);
  }
}

TEST(MapAt, TwoNodeChain) {
  CgraSpec S = homogeneousArch("g", 2, 2, {OpKind::Add});
  MapResult R = mapAt(chain(2), S, 1);
  ASSERT_EQ(R.Status, MapStatus::Success);
  EXPECT_TRUE(verifyMapping(chain(2), S, *R.Map).empty());
}

TEST(MapAt, BelowResourceBoundFails) {
  CgraSpec S = homogeneousArch("g", 2, 2, {OpKind::Add});
  S.Pes[0].Supported.insert(OpKind::Mul);
  MapResult R = mapAt(parallelMuls(5), S, 4);
  EXPECT_FALSE(R.Map.has_value());
  EXPECT_EQ(R.Status, MapStatus::Infeasible);
}

TEST(Compile, FullyParallelKernel) {
  Dfg D = parseDfg("a input a\nb input b\np add a b\nq mul a b\n"
                   "r sub a b\ns xor a b\nout p\nout q\nout r\nout s");
  CgraSpec S = homogeneousArch("g", 2, 2, OpSet::parse("add,mul,sub,xor"));
  CompileResult C = compile(D, S);
  ASSERT_TRUE(C.Map.has_value());
  EXPECT_EQ(C.Ii, 1u);
  EXPECT_TRUE(verifyMapping(D, S, *C.Map).empty());
}

TEST(Compile, SerialChainOnOnePe) {
  CgraSpec S = onePe({OpKind::Add});
  CompileResult C = compile(chain(6), S);
  ASSERT_TRUE(C.Map.has_value());
  EXPECT_EQ(C.Ii, 6u);
  EXPECT_TRUE(verifyMapping(chain(6), S, *C.Map).empty());
}

TEST(Compile, EmptyKernel) {
  Dfg D = parseDfg("a input a\nout a");
  CompileResult C = compile(D, onePe({OpKind::Add}));
  ASSERT_TRUE(C.Map.has_value());
  EXPECT_EQ(C.Ii, 1u);
  EXPECT_EQ(C.Map->scheduleLength(), 0u);
}

TEST(Compile, UnsupportedOpRejected) {
  EXPECT_THROW(compile(chain(2, "mul"), onePe({OpKind::Add})),
               UnsupportedOpError);
  EXPECT_THROW(resMii(chain(2, "mul"), onePe({OpKind::Add})),
               UnsupportedOpError);
}

static bool coverable(const Dfg &D, const CgraSpec &S) {
  for (const Node &N : D.Nodes)
    if (!isLeafOp(N.Op) && !supportedOps(S).contains(N.Op))
      return false;
  return true;
}

TEST(Compile, RewrittenKernelOnCca) {
  Dfg D = parseDfg("a input a\nb input b\nm const -1\nx xor b m\n"
                   "o const 1\nn add x o\nr add a n\nout r");
  CgraSpec S = builtinArch("cca");
  CompileResult C = compile(D, S);
  ASSERT_TRUE(C.Map.has_value());
  EXPECT_LE(C.Ii, D.numOps());
  EXPECT_TRUE(verifyMapping(D, S, *C.Map).empty());
  EXPECT_FALSE(printMapping(D, S, *C.Map).empty());
}

TEST(EstimateCycles, Formula) {
  Mapping M;
  M.Ii = 1;
  M.Places = {Placement{0, 0}, Placement{0, 1}, Placement{0, 2}};
  EXPECT_EQ(M.scheduleLength(), 3u);
  EXPECT_EQ(estimateCycles(M, 100), 102u);
  EXPECT_EQ(estimateCycles(M, 1), 3u);
  Mapping N;
  N.Ii = 2;
  N.Places = {Placement{0, 0}, Placement{1, 3}};
  EXPECT_EQ(estimateCycles(N, 10), 22u);
  EXPECT_THROW(estimateCycles(N, 0), Error);
}

static bool has(const std::vector<MappingViolation> &V,
                MappingViolation::Kind K) {
  for (const MappingViolation &X : V)
    if (X.K == K)
      return true;
  return false;
}

TEST(Verifier, ResourceConflict) {
  Dfg D = parseDfg("a input a\np add a a\nq add a a\nout p\nout q");
  CgraSpec S = homogeneousArch("g", 1, 2, {OpKind::Add});
  Mapping M;
  M.Ii = 2;
  M.Places = {std::nullopt, Placement{0, 0}, Placement{0, 2}};
  EXPECT_TRUE(has(verifyMapping(D, S, M), MappingViolation::ResourceConflict));
  M.Places[2] = Placement{1, 2};
  EXPECT_TRUE(verifyMapping(D, S, M).empty());
}

TEST(Verifier, RoutingThroughUnlinkedPes) {
  Dfg D = parseDfg("a input a\np add a a\nq add p a\nout q");
  CgraSpec S = homogeneousArch("g", 2, 2, {OpKind::Add});
  Mapping M;
  M.Ii = 4;
  // PE 0 -> PE 3 is diagonal: no link.
  M.Places = {std::nullopt, Placement{0, 0}, Placement{3, 1}};
  EXPECT_TRUE(has(verifyMapping(D, S, M), MappingViolation::Routing));
  M.Places[2] = Placement{3, 2};
  M.Routes[{2, 0}] = {Placement{3, 1}};
  EXPECT_TRUE(has(verifyMapping(D, S, M), MappingViolation::Routing));
  M.Routes[{2, 0}] = {Placement{1, 1}};
  EXPECT_TRUE(verifyMapping(D, S, M).empty());
}

TEST(Verifier, OtherViolations) {
  Dfg D = parseDfg("a input a\np add a a\nq mul p a\nout q");
  CgraSpec S = homogeneousArch("g", 1, 2, {OpKind::Add});
  Mapping M;
  M.Ii = 2;
  M.Places = {std::nullopt, Placement{0, 1}, Placement{1, 1}};
  auto V = verifyMapping(D, S, M);
  EXPECT_TRUE(has(V, MappingViolation::UnsupportedOp));
  EXPECT_TRUE(has(V, MappingViolation::Dependence));
  M.Places[2] = std::nullopt;
  EXPECT_TRUE(has(verifyMapping(D, S, M), MappingViolation::Unplaced));
  M.Places[2] = Placement{9, 2};
  EXPECT_TRUE(has(verifyMapping(D, S, M), MappingViolation::UnknownPe));
  M.Ii = 0;
  EXPECT_TRUE(has(verifyMapping(D, S, M), MappingViolation::BadIi));
}

static unsigned exhaustiveIi(const Dfg &D, const CgraSpec &S, unsigned Upto,
                             bool &Complete) {
  Complete = true;
  for (unsigned Ii = 1; Ii <= Upto; ++Ii) {
    oracle::FeasibilityResult F =
        oracle::exhaustiveFeasible(D, S, Ii, 20'000'000);
    if (!F.Complete) {
      Complete = false;
      return 0;
    }
    if (F.Feasible)
      return Ii;
  }
  return 0;
}

TEST(MapperProperty, SoundAndOptimalOnToyInstances) {
  std::mt19937_64 Rng(2024);
  unsigned Compared = 0;
  for (int I = 0; I < 120; ++I) {
    Dfg D = oracle::randomKernel(Rng, 7);
    CgraSpec S = oracle::randomGrid(Rng, 2, 2);
    if (!coverable(D, S)) {
      EXPECT_THROW(compile(D, S), UnsupportedOpError);
      EXPECT_FALSE(oracle::exhaustiveFeasible(D, S, 8, 1000).Feasible);
      continue;
    }
    CompileResult C = compile(D, S);
    if (C.Map) {
      auto V = verifyMapping(D, S, *C.Map);
      ASSERT_TRUE(V.empty()) << V[0].Message << "\n" << serializeDfg(D);
      EXPECT_GE(C.Ii, std::max(C.ResMii, C.RecMii));
    }
    bool Complete;
    unsigned Best = exhaustiveIi(D, S, C.Ii, Complete);
    if (!Complete)
      continue;
    ++Compared;
    if (C.Map)
      EXPECT_EQ(C.Ii, Best) << serializeDfg(D) << serializeArch(S);
    else
      EXPECT_EQ(Best, 0u) << serializeDfg(D) << serializeArch(S);
  }
  RecordProperty("compared", static_cast<int>(Compared));
  EXPECT_GT(Compared, 60u);
}

TEST(MapperProperty, AddingCapablePeNeverHurts) {
  std::mt19937_64 Rng(8);
  for (int I = 0; I < 60; ++I) {
    Dfg D = oracle::randomKernel(Rng, 7);
    CgraSpec S = oracle::randomGrid(Rng, 1, 2);
    if (!coverable(D, S))
      continue;
    CgraSpec Bigger = S;
    ProcessingElement P;
    P.Id = static_cast<unsigned>(S.Pes.size());
    P.Row = S.Rows;
    P.Col = 0;
    P.Supported = OpSet::parse("add,sub,mul,xor");
    Bigger.Rows += 1;
    Bigger.Pes.push_back(P);
    Bigger.Links = meshLinks(Bigger);
    CompileResult A = compile(D, S), B = compile(D, Bigger);
    if (A.Map && A.LastStatus == MapStatus::Success) {
      ASSERT_TRUE(B.Map.has_value());
      EXPECT_LE(B.Ii, A.Ii);
    }
  }
}
