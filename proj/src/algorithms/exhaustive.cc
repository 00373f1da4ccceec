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

#include "wmax/algorithms/exhaustive.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wmax/core/errors.h"
#include "wmax/core/parallel.h"

namespace wmax {
namespace {

constexpr int64_t kChunk = 512;
constexpr double kTieRelTol = 1e-12;

void CheckArgs(int d, int k) {
  if (k < 0 || k > d) throw DomainError("ExhaustiveOpt: need 0 <= k <= d");
  if (Binomial(d, k) > kMaxExhaustiveSubsets) {
    throw CapacityError("ExhaustiveOpt: C(" + std::to_string(d) + ", " +
                        std::to_string(k) + ") exceeds the cap");
  }
}

// Index of the first value within the relative tie tolerance of the max.
size_t FirstNearMax(const std::vector<double>& values) {
  const double best = *std::max_element(values.begin(), values.end());
  const double cutoff = best - kTieRelTol * std::max(1.0, std::abs(best));
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= cutoff) return i;
  }
  return 0;
}

}  // namespace

ExhaustiveResult ExhaustiveOpt(const SetFunctionOracle& oracle, int k) {
  const int d = oracle.ground_size();
  CheckArgs(d, k);
  // Global index = offset[size] + lexicographic rank within that size.
  std::vector<int64_t> offset(k + 2, 0);
  for (int size = 0; size <= k; ++size) {
    offset[size + 1] = offset[size] + static_cast<int64_t>(Binomial(d, size));
  }
  const int64_t total = offset[k + 1];
  std::vector<double> values(total);

  struct Task {
    int size;
    int64_t begin;
    int64_t end;
  };
  std::vector<Task> tasks;
  for (int size = 0; size <= k; ++size) {
    const int64_t count = offset[size + 1] - offset[size];
    for (int64_t b = 0; b < count; b += kChunk) {
      tasks.push_back({size, b, std::min(count, b + kChunk)});
    }
  }
  ExceptionCollector errors;
  const int64_t num_tasks = static_cast<int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (int64_t t = 0; t < num_tasks; ++t) {
    errors.Run([&] {
      const Task& task = tasks[t];
      std::vector<int> combo;
      UnrankCombination(d, task.size, static_cast<uint64_t>(task.begin),
                        &combo);
      for (int64_t rank = task.begin; rank < task.end; ++rank) {
        values[offset[task.size] + rank] = oracle.Value(Subset(d, combo));
        NextCombination(d, &combo);
      }
    });
  }
  errors.Rethrow();

  const int64_t best = static_cast<int64_t>(FirstNearMax(values));
  int size = 0;
  while (offset[size + 1] <= best) ++size;
  std::vector<int> combo;
  UnrankCombination(d, size, static_cast<uint64_t>(best - offset[size]),
                    &combo);
  return {Subset(d, combo), values[best], total};
}

namespace serial {

ExhaustiveResult ExhaustiveOpt(const SetFunctionOracle& oracle, int k) {
  const int d = oracle.ground_size();
  CheckArgs(d, k);
  std::vector<Subset> subsets;
  std::vector<double> values;
  SubsetEnumerator it(d, k);
  Subset s;
  while (it.Next(&s)) {
    values.push_back(oracle.Value(s));
    subsets.push_back(s);
  }
  const size_t best = FirstNearMax(values);
  return {subsets[best], values[best], static_cast<int64_t>(values.size())};
}

}  // namespace serial
}  // namespace wmax
