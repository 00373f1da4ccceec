// Copyright 2026 The Authors.
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

// Serial vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "wmax/algorithms/exhaustive.h"
#include "wmax/algorithms/fpt.h"
#include "wmax/bench/generators.h"
#include "wmax/objectives/coverage.h"
#include "wmax/objectives/quadratic_loss.h"
#include "wmax/ratios/ratios.h"
#include "wmax/ratios/set_function_table.h"
#include "wmax/ratios/spectral.h"

namespace wmax {
namespace {

CoverageOracle MakeCoverage(int d) {
  return CoverageOracle(GenerateCoverageInstance(d, 4 * d, 0.2, 17));
}

QuadraticLossInstance MakeQuadratic(int d) {
  RegressionOptions o;
  o.d = d;
  o.n = 4 * d;
  o.k = 3;
  return ToQuadraticInstance(GenerateSyntheticRegression(o, 17));
}

template <bool kParallel>
void BM_Tabulate(benchmark::State& state) {
  const CoverageOracle f = MakeCoverage(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if constexpr (kParallel) {
      benchmark::DoNotOptimize(SetFunctionTable::Tabulate(f));
    } else {
      benchmark::DoNotOptimize(serial::Tabulate(f));
    }
  }
}
BENCHMARK(BM_Tabulate<false>)->Arg(12)->Arg(16);
BENCHMARK(BM_Tabulate<true>)->Arg(12)->Arg(16);

template <bool kParallel>
void BM_UniformRatios(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const SetFunctionTable t = SetFunctionTable::Tabulate(MakeCoverage(d));
  for (auto _ : state) {
    if constexpr (kParallel) {
      benchmark::DoNotOptimize(UniformSubmodularityRatio(t, 3, 3));
      benchmark::DoNotOptimize(UniformSupermodularityRatio(t, 3, 3));
    } else {
      benchmark::DoNotOptimize(serial::UniformSubmodularityRatio(t, 3, 3));
      benchmark::DoNotOptimize(serial::UniformSupermodularityRatio(t, 3, 3));
    }
  }
}
BENCHMARK(BM_UniformRatios<false>)->Arg(10)->Arg(12);
BENCHMARK(BM_UniformRatios<true>)->Arg(10)->Arg(12);

template <bool kParallel>
void BM_Exhaustive(benchmark::State& state) {
  const CoverageOracle f = MakeCoverage(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    if constexpr (kParallel) {
      benchmark::DoNotOptimize(ExhaustiveOpt(f, 4));
    } else {
      benchmark::DoNotOptimize(serial::ExhaustiveOpt(f, 4));
    }
  }
}
BENCHMARK(BM_Exhaustive<false>)->Arg(16)->Arg(20);
BENCHMARK(BM_Exhaustive<true>)->Arg(16)->Arg(20);

template <bool kParallel>
void BM_RscRsm(benchmark::State& state) {
  const QuadraticLossInstance inst = MakeQuadratic(static_cast<int>(state.range(0)));
  const QuadraticLoss loss(inst);
  for (auto _ : state) {
    if constexpr (kParallel) {
      benchmark::DoNotOptimize(ComputeRscRsm(loss.hessian(), 3, 3));
    } else {
      benchmark::DoNotOptimize(serial::ComputeRscRsm(loss.hessian(), 3, 3));
    }
  }
}
BENCHMARK(BM_RscRsm<false>)->Arg(12)->Arg(16);
BENCHMARK(BM_RscRsm<true>)->Arg(12)->Arg(16);

template <bool kParallel>
void BM_Fpt(benchmark::State& state) {
  const CoverageOracle f = MakeCoverage(20);
  const int64_t t = state.range(0);
  for (auto _ : state) {
    if constexpr (kParallel) {
      benchmark::DoNotOptimize(FptRandomized(f, 4, t, 1));
    } else {
      benchmark::DoNotOptimize(serial::FptRandomized(f, 4, t, 1));
    }
  }
}
BENCHMARK(BM_Fpt<false>)->Arg(1000)->Arg(10000);
BENCHMARK(BM_Fpt<true>)->Arg(1000)->Arg(10000);

}  // namespace
}  // namespace wmax

BENCHMARK_MAIN();
