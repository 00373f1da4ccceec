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

#ifndef WMAX_ALGORITHMS_FPT_H_
#define WMAX_ALGORITHMS_FPT_H_

#include <cstdint>

#include "wmax/algorithms/algo_result.h"
#include "wmax/core/oracle.h"

namespace wmax {

// Marginals at or below this value count as zero when sampling.
inline constexpr double kFptZeroMarginal = 1e-12;

struct FptParams {
  double gamma_k = 1.0;   // lower bound on gamma_k
  double beta_kd = 1.0;   // lower bound on beta_{k,d}
  double f_tilde = 0.0;   // F([d]) - F(S*)
  double epsilon = 1.0;
  double delta = 0.5;
  int k = 1;
};

// T = ceil((1/(gamma beta) * (F~ + eps)/eps)^k * ln(1/delta)), at least 1.
// The argument of the ceiling is first multiplied by (1 - 1e-12).
// Throws DomainError on ratios outside (0, 1], eps <= 0, delta outside (0, 1)
// or F~ < 0, and CapacityError if T does not fit in 62 bits.
int64_t FptIterations(const FptParams& params);

struct FptOptions {
  bool memoize = true;  // share F values across runs
};

// T independent proportional-sampling greedy runs, run r drawing from
// CounterRng(seed + r); at each step j is chosen with probability
// proportional to max(0, Delta F(j|S)), or uniformly among the remaining
// elements when every marginal is <= kFptZeroMarginal. Returns the best final
// set (ties to the lowest run index). Runs execute on OpenMP threads.
AlgoResult FptRandomized(const SetFunctionOracle& oracle, int k, int64_t t,
                         uint64_t seed, FptOptions options = {});

namespace serial {

// Single-threaded reference for FptRandomized.
AlgoResult FptRandomized(const SetFunctionOracle& oracle, int k, int64_t t,
                         uint64_t seed, FptOptions options = {});

}  // namespace serial
}  // namespace wmax

#endif  // WMAX_ALGORITHMS_FPT_H_
