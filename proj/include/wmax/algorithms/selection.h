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

#ifndef WMAX_ALGORITHMS_SELECTION_H_
#define WMAX_ALGORITHMS_SELECTION_H_

#include <span>
#include <vector>

namespace wmax {

// Scores within this fraction of the leading score are treated as tied.
inline constexpr double kTieTolerance = 1e-7;

// Batch sizes b_1..b_m: the first k - m floor(k/m) equal ceil(k/m), the rest
// floor(k/m).
struct BatchSchedule {
  int k = 0;
  std::vector<int> batches;

  int rounds() const { return static_cast<int>(batches.size()); }
  int b_max() const;
};

// Throws DomainError unless 1 <= m <= k.
BatchSchedule MakeBatchSchedule(int k, int m);

// Picks `b` entries of `candidates` (ascending indices) by repeatedly taking
// the largest remaining score; scores within kTieTolerance * |max| of the
// maximum are tied and the smallest index wins. Returns the picks in the
// order they were taken.
std::vector<int> SelectTopB(std::span<const int> candidates,
                            std::span<const double> scores, int b,
                            double tie_tolerance = kTieTolerance);

}  // namespace wmax

#endif  // WMAX_ALGORITHMS_SELECTION_H_
