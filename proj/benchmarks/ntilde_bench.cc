// Copyright 2026 The ntilde Authors
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

#include <benchmark/benchmark.h>

#include <string>
#include <variant>

#include "ntilde/encoders.h"
#include "ntilde/skolemizer.h"
#include "ntilde/solver.h"
#include "ntilde/textio.h"
#include "testing/corpus.h"

namespace ntilde {
namespace {

void BM_EvaluateNestedExp2(benchmark::State& state) {
  // E(E(1, x), x) evaluates to 2^(2x) through two shifts.
  const TTerm x = TTerm::Variable(Var("x"));
  const TTerm term = TTerm::Exp2(TTerm::Exp2(TTerm::One(), x), x);
  const Assignment a = {{Var("x"), state.range(0)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Evaluate(term, a));
  }
}
BENCHMARK(BM_EvaluateNestedExp2)->RangeMultiplier(4)->Range(16, 1 << 14);

void BM_DividesMersenne(benchmark::State& state) {
  const Natural m = state.range(0);
  const Natural n = m * 1000 + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(DividesMersenne(m, n));
  }
}
BENCHMARK(BM_DividesMersenne)->RangeMultiplier(8)->Range(8, 1 << 15);

void BM_SolveGrid(benchmark::State& state) {
  const System s = ParseSystem("domain N>1\nx * x + y * y = z * z\nz = x + y");
  SolveOptions options;
  options.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveBounded(s, state.range(0), options));
  }
  state.SetItemsProcessed(state.iterations() * (state.range(0) - 1) *
                          (state.range(0) - 1) * (state.range(0) - 1));
}
BENCHMARK(BM_SolveGrid)
    ->ArgsProduct({{20, 60}, {1, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

void BM_SolveSkolemCorpus(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& entry : testing::SkolemCorpus()) {
      const auto skolem =
          AsSkolemSystem(std::get<NSystem>(ParseSystem(entry.text)));
      benchmark::DoNotOptimize(SolveSkolemBounded(*skolem, 10));
    }
  }
}
BENCHMARK(BM_SolveSkolemCorpus)->Unit(benchmark::kMillisecond);

void BM_CompileAndLift(benchmark::State& state) {
  // z = x * y with x = y = range, so the square gadgets see x^2 near 2^(2k).
  const auto skolem =
      AsSkolemSystem(std::get<NSystem>(ParseSystem("domain N>1\nz = x * y")));
  const Natural v = state.range(0);
  const Assignment originals = {
      {Var("x"), v}, {Var("y"), v}, {Var("z"), v * v}};
  for (auto _ : state) {
    FreshVars fresh;
    const CompiledSystem compiled = CompileSystem(*skolem, &fresh);
    const Assignment lifted = LiftWitness(compiled.plan, originals);
    benchmark::DoNotOptimize(Verify(compiled.system, lifted).ok());
  }
}
BENCHMARK(BM_CompileAndLift)->RangeMultiplier(4)->Range(4, 256);

}  // namespace
}  // namespace ntilde

BENCHMARK_MAIN();
