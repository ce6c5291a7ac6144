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

//===- DfgTest.cpp --------------------------------------------------------===//

#include "TestUtil.h"

#include "flexc/Error.h"
#include "flexc/ProgramSpace.h"

#include <gtest/gtest.h>

using namespace flexc;
using namespace flexc::test;

TEST(DfgParse, ThreeNodeAdd) {
  Dfg D = parseDfg("n0 input a\nn1 input b\nn2 add n0 n1\nout n2");
  ASSERT_EQ(D.size(), 3u);
  ASSERT_EQ(D.Outputs.size(), 1u);
  EXPECT_EQ(D.Nodes[D.Outputs[0]].Label, "n2");
  EXPECT_EQ(D.Nodes[D.Outputs[0]].Op, OpKind::Add);
  EXPECT_EQ(D.numOps(), 1u);
}

TEST(DfgParse, SingleConst) {
  Dfg D = parseDfg("n0 const 5\nout n0");
  ASSERT_EQ(D.size(), 1u);
  EXPECT_EQ(D.Nodes[0].Op, OpKind::Const);
  EXPECT_EQ(D.Nodes[0].Imm, 5);
}

TEST(DfgParse, Errors) {
  EXPECT_THROW(parseDfg("n0 input a\nn1 input b\nn2 add n0 n9\nout n2"),
               ParseError);
  EXPECT_THROW(parseDfg("n0 input a\n"), ParseError);
  EXPECT_THROW(parseDfg("n0 frob a\nout n0"), ParseError);
  EXPECT_THROW(parseDfg("n0 input a\nn0 input b\nout n0"), ParseError);
  EXPECT_THROW(parseDfg("n0 input a\nn1 neg n0 n0\nout n1"), ParseError);
  EXPECT_THROW(parseDfg("n0 const 99999999999\nout n0"), ParseError);
  EXPECT_THROW(parseDfg("x add y y\ny add x x\nout x"), ParseError);
}

TEST(DfgParse, CommentsAndCarriedEdges) {
  Dfg D = parseDfg("# accumulator\nx input x\nacc add acc x\n"
                   "dist acc acc 1\nout acc\n");
  EXPECT_TRUE(D.hasCarriedEdges());
  EXPECT_TRUE(validate(D).empty());
  int Acc = D.find("acc");
  ASSERT_GE(Acc, 0);
  EXPECT_EQ(D.Nodes[Acc].Operands[0].Distance, 1u);
  EXPECT_EQ(D.Nodes[Acc].Operands[1].Distance, 0u);
}

TEST(DfgValidate, Violations) {
  Dfg Ok = parseDfg("a input a\nb add a a\nc add b b\nout c");
  EXPECT_TRUE(validate(Ok).empty());

  Dfg Arity = Ok;
  Arity.Nodes[1].Operands.pop_back();
  auto V = validate(Arity);
  ASSERT_FALSE(V.empty());
  EXPECT_EQ(V[0].K, Violation::Arity);

  Dfg Cyc = Ok;
  Cyc.Nodes[1].Operands[0] = {2, 0};
  bool SawCycle = false;
  for (const Violation &X : validate(Cyc))
    SawCycle |= X.K == Violation::Cycle;
  EXPECT_TRUE(SawCycle);

  Dfg NoOut = Ok;
  NoOut.Outputs.clear();
  ASSERT_FALSE(validate(NoOut).empty());
  EXPECT_EQ(validate(NoOut)[0].K, Violation::NoOutputs);

  Dfg Dangling = Ok;
  Dangling.Nodes[2].Operands[0] = {17, 0};
  EXPECT_FALSE(validate(Dangling).empty());
}

TEST(DfgCost, UnsupportedNodes) {
  Dfg D = subKernel();
  auto U = unsupportedNodes(D, {OpKind::Add, OpKind::Neg});
  ASSERT_EQ(U.size(), 1u);
  EXPECT_EQ(D.Nodes[U[0]].Op, OpKind::Sub);
  EXPECT_TRUE(unsupportedNodes(parseDfg("a input a\nb input b\n"
                                        "s add a b\nout s"),
                               {OpKind::Add})
                  .empty());
}

TEST(DfgCost, MulAndSubBothFlagged) {
  Dfg D = parseDfg("x input x\ny input y\nk const 3\nm mul x k\n"
                   "s sub m y\nout s");
  auto U = unsupportedNodes(D, OpSet::parse("add,xor,cmp"));
  EXPECT_EQ(U.size(), 2u);
}

TEST(DfgCost, Formula) {
  Dfg D = parseDfg("a input a\nb add a a\nc add b b\nd xor c c\nout d");
  EXPECT_EQ(cost(D, {OpKind::Add, OpKind::Xor}), 3u);
  EXPECT_EQ(cost(D, {OpKind::Add}), 1'000'002u);
  EXPECT_EQ(cost(parseDfg("a input a\nout a"), {}), 0u);
}

TEST(DfgText, SerializeRoundTrip) {
  Dfg D = parseDfg("x input x\nk fconst 0.1\nf fmul x k\nacc add acc x\n"
                   "dist acc acc 1\nout f\nout acc\n");
  EXPECT_EQ(parseDfg(serializeDfg(D)), D);
}

TEST(DfgProperty, RoundTripAndCostOnRandomPrograms) {
  ProgramSpace S;
  S.Grammar = OpSet::parse("add,sub,mul,neg,xor,shl,select,lt");
  S.MaxOps = 6;
  S.NumInputs = 3;
  S.Constants = {-1, 1, 7};
  OpSet Target = OpSet::parse("add,xor,neg");
  for (const Dfg &D : samplePrograms(S, 1, 200, 42)) {
    EXPECT_TRUE(validate(D).empty());
    EXPECT_EQ(parseDfg(serializeDfg(D)), D);
    EXPECT_EQ(cost(D, Target) < UnsupportedPenalty,
              unsupportedNodes(D, Target).empty());
  }
}

TEST(DfgTransform, RemoveDeadAndTopoSort) {
  Dfg D = parseDfg("a input a\nb input b\ndead mul a b\ns add a b\nout s");
  Dfg Live = removeDead(D);
  EXPECT_EQ(Live.size(), 3u);
  EXPECT_EQ(Live.find("dead"), -1);
  DfgBuilder B;
  uint32_t X = B.input("x");
  uint32_t Y = B.op(OpKind::Neg, {X});
  B.output(B.op(OpKind::Add, {X, Y}));
  Dfg Built = B.build();
  EXPECT_TRUE(validate(Built).empty());
  EXPECT_EQ(Built.numOps(), 2u);
}

TEST(DfgTransform, StructuralKeyIgnoresLabels) {
  Dfg A = parseDfg("p input a\nq input b\nr sub p q\nout r");
  Dfg B = parseDfg("x input a\ny input b\nz sub x y\nout z");
  Dfg C = parseDfg("x input a\ny input b\nz sub y x\nout z");
  EXPECT_EQ(structuralKey(A), structuralKey(B));
  EXPECT_NE(structuralKey(A), structuralKey(C));
}
