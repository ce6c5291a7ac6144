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

#include "flexc/Cgra.h"
#include "flexc/Mapper.h"

#include <benchmark/benchmark.h>

#include <string>

using namespace flexc;

static Dfg reduction(int Terms) {
  std::string Text;
  for (int I = 0; I < Terms; ++I)
    Text += "v" + std::to_string(I) + " input v" + std::to_string(I) + "\n";
  Text += "s1 add v0 v1\n";
  for (int I = 2; I < Terms; ++I)
    Text += "s" + std::to_string(I) + " add s" + std::to_string(I - 1) +
            " v" + std::to_string(I) + "\n";
  Text += "acc add s" + std::to_string(Terms - 1) + " acc\ndist acc acc 1\nout acc\n";
  return parseDfg(Text);
}

static void BM_CompileReduction(benchmark::State &State) {
  Dfg D = reduction(static_cast<int>(State.range(0)));
  CgraSpec S = homogeneousArch("mesh", 4, 4, OpSet::parse("add"));
  for (auto _ : State) {
    CompileResult R = compile(D, S);
    benchmark::DoNotOptimize(R.Ii);
  }
}
BENCHMARK(BM_CompileReduction)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_CompileOnBuiltin(benchmark::State &State) {
  const std::string &Name = builtinArchNames()[State.range(0)];
  CgraSpec S = builtinArch(Name);
  Dfg D = reduction(8);
  State.SetLabel(Name);
  for (auto _ : State) {
    CompileResult R = compile(D, S);
    benchmark::DoNotOptimize(R.Ii);
  }
}
BENCHMARK(BM_CompileOnBuiltin)->DenseRange(0, 3);

BENCHMARK_MAIN();
