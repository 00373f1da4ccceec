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

#ifndef WMAX_ALGORITHMS_HARD_THRESHOLDING_H_
#define WMAX_ALGORITHMS_HARD_THRESHOLDING_H_

#include <Eigen/Dense>

#include "wmax/algorithms/algo_result.h"
#include "wmax/objectives/smooth_loss.h"

namespace wmax {

struct ThresholdingOptions {
  double step = 0.0;  // <= 0 selects 1/L from SmoothLoss::SmoothnessConstant
  double tol = 1e-5;  // stop once 0 <= loss decrease < tol
  int max_iter = 10000;
  int max_increases = 10;  // consecutive loss increases before giving up
};

struct ThresholdingResult {
  Eigen::VectorXd x;
  AlgoResult result;  // solution = the selected k-support, value = l(0) - l(x)
  int iterations = 0;
};

// Indices of the k largest |v_j| (ties to the smaller index), ascending.
Subset TopKSupport(const Eigen::VectorXd& v, int k);

// Iterative hard thresholding: x <- H_k(x - eta grad l(x)) from x = 0.
// oracle_evals counts gradient evaluations. Throws DivergenceError after
// max_increases consecutive loss increases.
ThresholdingResult Iht(const SmoothLoss& loss, int k,
                       ThresholdingOptions options = {});

// Hard thresholding pursuit: the IHT step chooses a support, then x is the
// exact minimizer on it. Stops when a support repeats or the loss decrease
// falls below tol. oracle_evals counts restricted solves.
ThresholdingResult Htp(const SmoothLoss& loss, int k,
                       ThresholdingOptions options = {});

}  // namespace wmax

#endif  // WMAX_ALGORITHMS_HARD_THRESHOLDING_H_
