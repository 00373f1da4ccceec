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

#include "wmax/bench/solve.h"

#include <algorithm>

#include "wmax/algorithms/exhaustive.h"
#include "wmax/algorithms/fpt.h"
#include "wmax/algorithms/greedy.h"
#include "wmax/algorithms/hard_thresholding.h"
#include "wmax/algorithms/multi_stage.h"
#include "wmax/core/errors.h"

namespace wmax {

const std::vector<std::string>& SolverNames() {
  static const std::vector<std::string> kNames = {
      "greedy", "mgreedy", "omp",    "momp",   "oblivious",
      "fpt",    "iht",     "htp",    "random", "exact"};
  return kNames;
}

bool SolverNeedsLoss(const std::string& name) {
  return name == "omp" || name == "momp" || name == "iht" || name == "htp";
}

SolveOutcome SolveByName(const std::string& name, const BoundObjective& objective,
                         int k, const SolveOptions& options) {
  const auto& names = SolverNames();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw DomainError("unknown algorithm '" + name + "'");
  }
  if (SolverNeedsLoss(name) && !objective.loss) {
    throw DomainError("algorithm '" + name +
                      "' needs a differentiable loss objective");
  }
  const SetFunctionOracle& oracle = *objective.oracle;
  const int m = options.m > 0 ? options.m : k;
  ThresholdingOptions thresholding;
  thresholding.step = options.step;
  thresholding.tol = options.tol;
  thresholding.max_iter = options.max_iter;

  SolveOutcome out;
  if (name == "greedy") {
    out.result = Greedy(oracle, k);
  } else if (name == "mgreedy") {
    out.result = MultiGreedy(oracle, k, m);
  } else if (name == "omp") {
    out.result = Omp(*objective.loss, k);
  } else if (name == "momp") {
    out.result = MultiOmp(*objective.loss, k, m);
  } else if (name == "oblivious") {
    out.result = Oblivious(oracle, k);
  } else if (name == "fpt") {
    out.result = FptRandomized(oracle, k, options.t, options.seed);
  } else if (name == "iht" || name == "htp") {
    ThresholdingResult r = name == "iht"
                               ? Iht(*objective.loss, k, thresholding)
                               : Htp(*objective.loss, k, thresholding);
    out.result = std::move(r.result);
    out.coefficients = std::move(r.x);
  } else if (name == "random") {
    out.result = RandomBaseline(oracle, k, options.seed);
  } else {
    const ExhaustiveResult r = ExhaustiveOpt(oracle, k);
    out.result.algorithm = "exact";
    out.result.solution = r.solution;
    out.result.value = r.value;
    out.result.oracle_evals = r.evaluations;
    out.result.trajectory.push_back({r.solution, r.value});
  }
  if (objective.loss && !out.coefficients) {
    out.coefficients = objective.loss->RestrictedArgmin(out.result.solution);
  }
  return out;
}

}  // namespace wmax
