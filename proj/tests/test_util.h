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

#ifndef WMAX_TESTS_TEST_UTIL_H_
#define WMAX_TESTS_TEST_UTIL_H_

#include <cstdint>

#include <Eigen/Dense>

#include "wmax/core/rng.h"
#include "wmax/objectives/quadratic_loss.h"

namespace wmax::testing {

// Gaussian n x d design with y = A w + noise, w Gaussian.
inline QuadraticLossInstance RandomQuadratic(int n, int d, uint64_t seed,
                                             double noise = 0.1) {
  CounterRng rng(seed);
  Eigen::MatrixXd a(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = rng.Normal();
  }
  Eigen::VectorXd w(d);
  for (int j = 0; j < d; ++j) w(j) = rng.Normal();
  Eigen::VectorXd y = a * w;
  for (int i = 0; i < n; ++i) y(i) += noise * rng.Normal();
  return QuadraticLossInstance{a, y};
}

inline QuadraticLossInstance IdentityQuadratic(const Eigen::VectorXd& y) {
  return QuadraticLossInstance{
      Eigen::MatrixXd::Identity(y.size(), y.size()), y};
}

}  // namespace wmax::testing

#endif  // WMAX_TESTS_TEST_UTIL_H_
