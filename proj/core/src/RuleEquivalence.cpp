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

//===- RuleEquivalence.cpp ------------------------------------------------===//

#include "flexc/RuleEquivalence.h"
#include "flexc/Error.h"
#include "flexc/Interpreter.h"

#include <climits>
#include <cmath>
#include <random>

using namespace flexc;

static int32_t sampleInt(Domain D, std::mt19937_64 &Rng) {
  static const int32_t Edges[] = {0,  1,  -1,       2,        -2,
                                  31, 32, INT32_MIN, INT32_MAX, INT32_MIN + 1};
  std::uniform_int_distribution<uint32_t> Any;
  switch (D) {
  case Domain::Shift:
    return static_cast<int32_t>(Rng() % 32);
  case Domain::Bool:
    return static_cast<int32_t>(Rng() & 1);
  case Domain::NonNeg:
    if (Rng() % 4 == 0) {
      static const int32_t NonNegEdges[] = {0, 1, 2, 31, 32, INT32_MAX};
      return NonNegEdges[Rng() % 6];
    }
    return static_cast<int32_t>(Any(Rng) >> 1);
  case Domain::NonZero:
    for (;;) {
      int32_t V = Rng() % 4 == 0 ? Edges[Rng() % 10]
                                 : static_cast<int32_t>(Any(Rng));
      if (V)
        return V;
    }
  case Domain::Any:
  case Domain::Finite:
    break;
  }
  return Rng() % 4 == 0 ? Edges[Rng() % 10] : static_cast<int32_t>(Any(Rng));
}

static double sampleNormal(std::mt19937_64 &Rng) {
  std::uniform_real_distribution<double> Mant(1.0, 2.0);
  std::uniform_int_distribution<int> Exp(-30, 30);
  double V = std::ldexp(Mant(Rng), Exp(Rng));
  return (Rng() & 1) ? -V : V;
}

static bool evalBoth(const Dfg &L, const Dfg &R, const Env &E,
                     std::vector<Value> &LV, std::vector<Value> &RV,
                     bool &LhsValid, std::string &Err) {
  try {
    LV = interpret(L, E).Outputs;
  } catch (const EvalError &) {
    LhsValid = false;
    return true;
  }
  LhsValid = true;
  try {
    RV = interpret(R, E).Outputs;
  } catch (const EvalError &X) {
    Err = std::string("right-hand side failed: ") + X.what();
    return false;
  }
  return true;
}

static std::string describe(const Env &E) {
  std::string S;
  for (auto &[K, V] : E)
    S += (S.empty() ? "" : ", ") + K + "=" + V.str();
  return S;
}

EquivalenceReport flexc::checkRuleEquivalence(const RewriteRule &R,
                                              unsigned Samples, uint64_t Seed,
                                              double RelTolerance) {
  EquivalenceReport Rep;
  if (R.Sem == Semantics::Stochastic) {
    Rep.Exempt = true;
    return Rep;
  }
  Dfg L = patternToDfg(R.Lhs, R.VarNames);
  Dfg Rh = patternToDfg(R.Rhs, R.VarNames);
  std::vector<std::string> Names;
  for (const std::string &V : R.VarNames)
    Names.push_back(V.substr(1));

  std::vector<Value> LV, RV;
  std::string Err;
  bool Valid;

  auto Fail = [&](const Env &E, std::string Why) {
    Rep.Passed = false;
    Rep.Counterexample = describe(E) + ": " + Why;
  };

  if (R.Sem == Semantics::BooleanDomain) {
    const unsigned N = Names.size();
    for (unsigned Mask = 0; Mask < (1u << N); ++Mask) {
      Env E;
      for (unsigned I = 0; I < N; ++I)
        E[Names[I]] = int32_t((Mask >> I) & 1);
      if (!evalBoth(L, Rh, E, LV, RV, Valid, Err)) {
        Fail(E, Err);
        return Rep;
      }
      if (!Valid)
        continue;
      ++Rep.Samples;
      if (LV != RV) {
        Fail(E, "outputs differ");
        return Rep;
      }
    }
    return Rep;
  }

  std::mt19937_64 Rng(Seed);
  const bool Float = R.Sem == Semantics::FpRelaxed;
  unsigned Attempts = 0;
  while (Rep.Samples < Samples && Attempts++ < Samples * 20) {
    Env E;
    for (size_t I = 0; I < Names.size(); ++I) {
      Domain D = I < R.Domains.size() ? R.Domains[I] : Domain::Any;
      if (Float)
        E[Names[I]] = sampleNormal(Rng);
      else
        E[Names[I]] = sampleInt(D, Rng);
    }
    if (!evalBoth(L, Rh, E, LV, RV, Valid, Err)) {
      Fail(E, Err);
      return Rep;
    }
    if (!Valid)
      continue;
    ++Rep.Samples;
    if (!Float) {
      if (LV != RV) {
        Fail(E, "outputs differ");
        return Rep;
      }
      continue;
    }
    for (size_t O = 0; O < LV.size(); ++O) {
      double A = LV[O].asFloat(), B = RV[O].asFloat();
      double Mag = std::max(std::fabs(A), std::fabs(B));
      double Rel = Mag == 0.0 ? 0.0 : std::fabs(A - B) / Mag;
      if (!std::isfinite(Rel))
        Rel = (A == B) ? 0.0 : INFINITY;
      Rep.MaxRelError = std::max(Rep.MaxRelError, Rel);
      if (Rel > RelTolerance) {
        Fail(E, "relative error " + std::to_string(Rel));
        return Rep;
      }
    }
  }
  if (Rep.Samples < Samples) {
    Rep.Passed = false;
    Rep.Counterexample = "too few valid samples";
  }
  return Rep;
}
