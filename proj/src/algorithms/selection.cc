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

#include "wmax/algorithms/selection.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "wmax/algorithms/algo_result.h"
#include "wmax/core/errors.h"

namespace wmax {

int BatchSchedule::b_max() const {
  return batches.empty() ? 0 : *std::max_element(batches.begin(), batches.end());
}

BatchSchedule MakeBatchSchedule(int k, int m) {
  if (m < 1 || m > k) {
    throw DomainError("batch schedule needs 1 <= m <= k (k = " +
                      std::to_string(k) + ", m = " + std::to_string(m) + ")");
  }
  BatchSchedule schedule;
  schedule.k = k;
  const int base = k / m;
  const int larger = k - m * base;
  for (int i = 0; i < m; ++i) {
    schedule.batches.push_back(i < larger ? base + 1 : base);
  }
  return schedule;
}

std::vector<int> SelectTopB(std::span<const int> candidates,
                            std::span<const double> scores, int b,
                            double tie_tolerance) {
  if (candidates.size() != scores.size()) {
    throw DomainError("SelectTopB: one score per candidate required");
  }
  if (b < 0 || b > static_cast<int>(candidates.size())) {
    throw DomainError("SelectTopB: batch larger than the candidate pool");
  }
  std::vector<char> taken(candidates.size(), 0);
  std::vector<int> picks;
  for (int round = 0; round < b; ++round) {
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < scores.size(); ++i) {
      if (!taken[i] && scores[i] > best) best = scores[i];
    }
    const double cutoff =
        std::isinf(best) ? best : best - tie_tolerance * std::abs(best);
    size_t pick = scores.size();
    for (size_t i = 0; i < scores.size(); ++i) {
      if (taken[i] || !(scores[i] >= cutoff)) continue;
      if (pick == scores.size() || candidates[i] < candidates[pick]) pick = i;
    }
    if (pick == scores.size()) {
      for (size_t i = 0; i < scores.size(); ++i) {
        if (taken[i]) continue;
        if (pick == scores.size() || candidates[i] < candidates[pick]) pick = i;
      }
    }
    taken[pick] = 1;
    picks.push_back(candidates[pick]);
  }
  return picks;
}

std::string AlgoResult::ToString() const {
  std::ostringstream out;
  out.precision(17);
  out << "algorithm = " << algorithm << '\n'
      << "solution = " << solution.ToString() << '\n'
      << "size = " << solution.size() << '\n'
      << "value = " << value << '\n'
      << "oracle_evals = " << oracle_evals << '\n';
  if (rng_seed) out << "rng_seed = " << *rng_seed << '\n';
  return out.str();
}

std::string AlgoResult::TrajectoryCsv() const {
  std::ostringstream out;
  out.precision(17);
  out << "step,size,value\n";
  for (size_t i = 0; i < trajectory.size(); ++i) {
    out << i + 1 << ',' << trajectory[i].set.size() << ','
        << trajectory[i].value << '\n';
  }
  return out.str();
}

}  // namespace wmax
