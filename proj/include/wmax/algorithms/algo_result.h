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

#ifndef WMAX_ALGORITHMS_ALGO_RESULT_H_
#define WMAX_ALGORITHMS_ALGO_RESULT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wmax/core/subset.h"

namespace wmax {

// State after one round (or iteration) of a solver.
struct TrajectoryPoint {
  Subset set;
  double value = 0.0;
};

struct AlgoResult {
  std::string algorithm;
  Subset solution;
  double value = 0.0;  // F(solution), re-evaluated at exit
  std::vector<TrajectoryPoint> trajectory;
  // Algorithmic oracle cost. For set-function solvers this is the number of
  // F evaluations; for Multi-OMP/OMP/HTP the number of restricted solves; for
  // IHT the number of gradient evaluations. Bookkeeping evaluations (the
  // trajectory and the exit value) are excluded.
  int64_t oracle_evals = 0;
  std::optional<uint64_t> rng_seed;

  // Flat "key = value" lines.
  std::string ToString() const;
  // "step,size,value" rows with a header line.
  std::string TrajectoryCsv() const;
};

}  // namespace wmax

#endif  // WMAX_ALGORITHMS_ALGO_RESULT_H_
