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

#ifndef WMAX_ALGORITHMS_MULTI_STAGE_H_
#define WMAX_ALGORITHMS_MULTI_STAGE_H_

#include <span>
#include <vector>

#include "wmax/algorithms/algo_result.h"
#include "wmax/algorithms/selection.h"
#include "wmax/core/oracle.h"
#include "wmax/objectives/smooth_loss.h"

namespace wmax {

// Modular per-round scorer G_S(B) = sum_{j in B} g_S(j).
class Surrogate {
 public:
  virtual ~Surrogate() = default;
  // g_S(j) for each candidate j (ascending, disjoint from S).
  virtual std::vector<double> Scores(const Subset& s,
                                     std::span<const int> candidates) = 0;
};

// g_S(j) = F(S u {j}) - F(S). Costs 1 + |candidates| evaluations of the
// counting oracle per call; candidate evaluations run on OpenMP threads.
class MarginalGainSurrogate : public Surrogate {
 public:
  explicit MarginalGainSurrogate(const CountingOracle& oracle)
      : oracle_(oracle) {}
  std::vector<double> Scores(const Subset& s,
                             std::span<const int> candidates) override;

 private:
  const CountingOracle& oracle_;
};

// g_S(j) = (grad l(b^S))_j^2, with one restricted solve per call.
class SquaredGradientSurrogate : public Surrogate {
 public:
  explicit SquaredGradientSurrogate(const SmoothLoss& loss) : loss_(loss) {}
  std::vector<double> Scores(const Subset& s,
                             std::span<const int> candidates) override;
  int64_t restricted_solves() const { return solves_; }

 private:
  const SmoothLoss& loss_;
  int64_t solves_ = 0;
};

// Runs the rounds of `schedule`: each round adds the b_i candidates with the
// largest surrogate scores (ties to the smallest index) and records
// (S_i, F(S_i)) on the oracle's bookkeeping channel. oracle_evals is the
// oracle's algorithmic count.
AlgoResult MultiStage(const CountingOracle& oracle, Surrogate& surrogate,
                      const BatchSchedule& schedule);

// Multi-Greedy: multi-stage with the marginal-gain surrogate.
AlgoResult MultiGreedy(const SetFunctionOracle& oracle, int k, int m);

// Multi-OMP on F(S) = l(0) - min_{supp(x) in S} l(x). oracle_evals counts the
// m restricted solves made by the surrogate.
AlgoResult MultiOmp(const SmoothLoss& loss, int k, int m);

}  // namespace wmax

#endif  // WMAX_ALGORITHMS_MULTI_STAGE_H_
