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

#ifndef WMAX_GUARANTEES_BOUNDS_H_
#define WMAX_GUARANTEES_BOUNDS_H_

#include <cstdint>
#include <span>
#include <string>

namespace wmax {

// A guarantee ratio together with the formula and inputs it came from.
// `ratio` is `raw` clamped to [0, 1]; `clamped` reports when that changed it.
struct BoundReport {
  std::string formula_id;
  std::string inputs;
  double raw = 0.0;
  double ratio = 0.0;
  bool clamped = false;

  std::string ToString() const;
};

struct MultiGreedyBounds {
  BoundReport product;      // 1 - prod_i (1 - gamma_i beta_i b_i / k*)
  BoundReport exponential;  // 1 - exp(-sum_i gamma_i beta_i b_i / k*)
};

// Per-round ratios gamma_i, beta_i in [0, 1] and batch sizes b_i <= k*.
// Throws DomainError otherwise.
MultiGreedyBounds MultiGreedyBound(std::span<const double> gammas,
                                   std::span<const double> betas,
                                   std::span<const int> batches, int k_star);

// 1 - exp(-(mu/nu) (k/k*)). Requires 0 < mu <= nu and k, k* >= 1.
BoundReport MompBound(double mu, double nu, int k, int k_star);

// 1 - ((k-r+1)/k) ((k-r)/(k-r+1))^(k-r+1), for 1 <= r <= k.
BoundReport HardnessAlpha(int k, int r);

// (2 + (r-1)/(k-r+1))^-1, for 1 <= r <= k.
BoundReport HardnessSprBound(int k, int r);

// 1 - (1 - q)^T for q in (0, 1] and T >= 1.
BoundReport FptSuccessBound(double q, int64_t t);

// Single-run success probability lower bound (gamma beta eps / (F~ + eps))^k.
double FptSingleRunProbability(double gamma_k, double beta_kd, double f_tilde,
                               double epsilon, int k);

}  // namespace wmax

#endif  // WMAX_GUARANTEES_BOUNDS_H_
