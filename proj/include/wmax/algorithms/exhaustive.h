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

#ifndef WMAX_ALGORITHMS_EXHAUSTIVE_H_
#define WMAX_ALGORITHMS_EXHAUSTIVE_H_

#include <cstdint>

#include "wmax/core/oracle.h"
#include "wmax/core/subset.h"

namespace wmax {

inline constexpr uint64_t kMaxExhaustiveSubsets = 2000000;

struct ExhaustiveResult {
  Subset solution;
  double value = 0.0;
  int64_t evaluations = 0;
};

// Exact max of F over all subsets with |S| <= k. Among values within a
// relative 1e-12 of the maximum, the first in size-then-lex order wins.
// Throws CapacityError when C(d, k) > kMaxExhaustiveSubsets. Subsets are
// evaluated on OpenMP threads in contiguous rank ranges.
ExhaustiveResult ExhaustiveOpt(const SetFunctionOracle& oracle, int k);

namespace serial {

ExhaustiveResult ExhaustiveOpt(const SetFunctionOracle& oracle, int k);

}  // namespace serial
}  // namespace wmax

#endif  // WMAX_ALGORITHMS_EXHAUSTIVE_H_
