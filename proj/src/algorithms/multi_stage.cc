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

#include "wmax/algorithms/multi_stage.h"

#include <string>

#include "wmax/core/errors.h"
#include "wmax/core/parallel.h"

namespace wmax {
namespace {

void CheckBudget(int k, int m, int d) {
  if (k < 1 || k > d) {
    throw DomainError("need 1 <= k <= d (k = " + std::to_string(k) +
                      ", d = " + std::to_string(d) + ")");
  }
  if (m < 1 || m > k) throw DomainError("need 1 <= m <= k");
}

}  // namespace

std::vector<double> MarginalGainSurrogate::Scores(
    const Subset& s, std::span<const int> candidates) {
  const double base = oracle_.Value(s);
  const int64_t n = static_cast<int64_t>(candidates.size());
  std::vector<double> scores(n);
  ExceptionCollector errors;
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < n; ++i) {
    errors.Run([&] {
      scores[i] = oracle_.Value(s.With(candidates[i])) - base;
    });
  }
  errors.Rethrow();
  return scores;
}

std::vector<double> SquaredGradientSurrogate::Scores(
    const Subset& s, std::span<const int> candidates) {
  ++solves_;
  const Eigen::VectorXd grad = loss_.Gradient(loss_.RestrictedArgmin(s));
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (int j : candidates) scores.push_back(grad(j) * grad(j));
  return scores;
}

AlgoResult MultiStage(const CountingOracle& oracle, Surrogate& surrogate,
                      const BatchSchedule& schedule) {
  const int d = oracle.ground_size();
  if (schedule.k > d) throw DomainError("MultiStage: k exceeds d");
  AlgoResult result;
  Subset s = Subset::Empty(d);
  std::vector<int> pool;
  for (int j = 0; j < d; ++j) pool.push_back(j);

  for (int b : schedule.batches) {
    const std::vector<double> scores = surrogate.Scores(s, pool);
    const std::vector<int> picks = SelectTopB(pool, scores, b);
    s = s.Union(Subset(d, picks));
    std::vector<int> rest;
    for (int j : pool) {
      if (!s.Contains(j)) rest.push_back(j);
    }
    pool.swap(rest);
    result.trajectory.push_back({s, oracle.BookkeepingValue(s)});
  }
  result.solution = s;
  result.value = result.trajectory.empty() ? oracle.BookkeepingValue(s)
                                           : result.trajectory.back().value;
  result.oracle_evals = oracle.eval_count();
  return result;
}

AlgoResult MultiGreedy(const SetFunctionOracle& oracle, int k, int m) {
  CheckBudget(k, m, oracle.ground_size());
  CountingOracle counting(oracle);
  MarginalGainSurrogate surrogate(counting);
  AlgoResult result = MultiStage(counting, surrogate, MakeBatchSchedule(k, m));
  result.algorithm = "mgreedy";
  return result;
}

AlgoResult MultiOmp(const SmoothLoss& loss, int k, int m) {
  CheckBudget(k, m, loss.dim());
  LossReductionOracle objective(loss);
  CountingOracle counting(objective);
  SquaredGradientSurrogate surrogate(loss);
  AlgoResult result = MultiStage(counting, surrogate, MakeBatchSchedule(k, m));
  result.algorithm = "momp";
  result.oracle_evals = surrogate.restricted_solves();
  return result;
}

}  // namespace wmax
