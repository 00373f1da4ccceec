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

#include "wmax/algorithms/greedy.h"

#include <string>
#include <vector>

#include "wmax/algorithms/selection.h"
#include "wmax/core/errors.h"
#include "wmax/core/parallel.h"
#include "wmax/core/rng.h"

namespace wmax {
namespace {

void CheckK(int k, int d) {
  if (k < 0 || k > d) {
    throw DomainError("need 0 <= k <= d (k = " + std::to_string(k) +
                      ", d = " + std::to_string(d) + ")");
  }
}

std::vector<int> Remaining(const Subset& s) {
  const Subset rest = s.Complement();
  return std::vector<int>(rest.begin(), rest.end());
}

}  // namespace

AlgoResult Greedy(const SetFunctionOracle& oracle, int k) {
  const int d = oracle.ground_size();
  CheckK(k, d);
  CountingOracle counting(oracle);
  AlgoResult result;
  result.algorithm = "greedy";
  Subset s = Subset::Empty(d);
  for (int round = 0; round < k; ++round) {
    const std::vector<int> pool = Remaining(s);
    const double base = counting.Value(s);
    const int64_t n = static_cast<int64_t>(pool.size());
    std::vector<double> gains(n);
    ExceptionCollector errors;
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < n; ++i) {
      errors.Run([&] { gains[i] = counting.Value(s.With(pool[i])) - base; });
    }
    errors.Rethrow();
    s = s.With(SelectTopB(pool, gains, 1).front());
    result.trajectory.push_back({s, counting.BookkeepingValue(s)});
  }
  result.solution = s;
  result.value = k == 0 ? counting.BookkeepingValue(s)
                        : result.trajectory.back().value;
  result.oracle_evals = counting.eval_count();
  return result;
}

AlgoResult Omp(const SmoothLoss& loss, int k) {
  const int d = loss.dim();
  CheckK(k, d);
  LossReductionOracle objective(loss);
  CountingOracle counting(objective);
  AlgoResult result;
  result.algorithm = "omp";
  Subset s = Subset::Empty(d);
  for (int round = 0; round < k; ++round) {
    const Eigen::VectorXd grad = loss.Gradient(loss.RestrictedArgmin(s));
    ++result.oracle_evals;
    const std::vector<int> pool = Remaining(s);
    std::vector<double> scores;
    for (int j : pool) scores.push_back(grad(j) * grad(j));
    s = s.With(SelectTopB(pool, scores, 1).front());
    result.trajectory.push_back({s, counting.BookkeepingValue(s)});
  }
  result.solution = s;
  result.value = k == 0 ? 0.0 : result.trajectory.back().value;
  return result;
}

AlgoResult Oblivious(const SetFunctionOracle& oracle, int k) {
  const int d = oracle.ground_size();
  CheckK(k, d);
  CountingOracle counting(oracle);
  std::vector<int> pool(d);
  std::vector<double> singles(d);
  ExceptionCollector errors;
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < d; ++j) {
    pool[j] = j;
    errors.Run([&] { singles[j] = counting.Value(Subset(d, {j})); });
  }
  errors.Rethrow();
  AlgoResult result;
  result.algorithm = "oblivious";
  result.solution = Subset(d, SelectTopB(pool, singles, k));
  result.value = counting.BookkeepingValue(result.solution);
  result.trajectory.push_back({result.solution, result.value});
  result.oracle_evals = counting.eval_count();
  return result;
}

Subset RandomSubset(int d, int k, uint64_t seed) {
  CheckK(k, d);
  CounterRng rng(seed);
  return Subset(d, rng.SampleWithoutReplacement(d, k));
}

AlgoResult RandomBaseline(const SetFunctionOracle& oracle, int k,
                          uint64_t seed) {
  AlgoResult result;
  result.algorithm = "random";
  result.rng_seed = seed;
  result.solution = RandomSubset(oracle.ground_size(), k, seed);
  result.value = oracle.Value(result.solution);
  result.trajectory.push_back({result.solution, result.value});
  return result;
}

}  // namespace wmax
