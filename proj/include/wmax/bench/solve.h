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

#ifndef WMAX_BENCH_SOLVE_H_
#define WMAX_BENCH_SOLVE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wmax/algorithms/algo_result.h"
#include "wmax/objectives/instance_io.h"

namespace wmax {

// Names accepted by SolveByName.
const std::vector<std::string>& SolverNames();

// True for solvers that need a differentiable loss (omp, momp, iht, htp).
bool SolverNeedsLoss(const std::string& name);

struct SolveOptions {
  int m = 0;  // stages for mgreedy/momp; 0 means m = k
  int64_t t = 1;  // FPT runs
  uint64_t seed = 0;
  double step = 0.0;
  double tol = 1e-5;
  int max_iter = 10000;
};

struct SolveOutcome {
  AlgoResult result;
  // Coefficients on the selected support for loss objectives: the IHT/HTP
  // iterate, otherwise the restricted minimizer.
  std::optional<Eigen::VectorXd> coefficients;
};

// Dispatches to greedy | mgreedy | omp | momp | oblivious | fpt | iht | htp |
// random | exact. Throws DomainError for unknown names or when a loss-based
// solver is asked to run on a combinatorial objective.
SolveOutcome SolveByName(const std::string& name, const BoundObjective& objective,
                         int k, const SolveOptions& options);

}  // namespace wmax

#endif  // WMAX_BENCH_SOLVE_H_
