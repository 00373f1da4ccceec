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

#ifndef WMAX_ALGORITHMS_GREEDY_H_
#define WMAX_ALGORITHMS_GREEDY_H_

#include <cstdint>

#include "wmax/algorithms/algo_result.h"
#include "wmax/core/oracle.h"
#include "wmax/core/subset.h"
#include "wmax/objectives/smooth_loss.h"

namespace wmax {

// Classic greedy: k rounds, each adding argmax_j Delta F(j|S). Uses the same
// tie rule as SelectTopB.
AlgoResult Greedy(const SetFunctionOracle& oracle, int k);

// Orthogonal matching pursuit: k rounds, each adding argmax_j
// |grad l(b^S)_j|, then re-solving on the enlarged support.
AlgoResult Omp(const SmoothLoss& loss, int k);

// Single-stage (oblivious) rule: evaluates F({j}) for every j and keeps the
// k largest. Exactly d algorithmic evaluations.
AlgoResult Oblivious(const SetFunctionOracle& oracle, int k);

// Uniform random k-subset of [d] drawn from CounterRng(seed).
Subset RandomSubset(int d, int k, uint64_t seed);
AlgoResult RandomBaseline(const SetFunctionOracle& oracle, int k,
                          uint64_t seed);

}  // namespace wmax

#endif  // WMAX_ALGORITHMS_GREEDY_H_
