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

#ifndef WMAX_BENCH_GENERATORS_H_
#define WMAX_BENCH_GENERATORS_H_

#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "wmax/core/subset.h"
#include "wmax/objectives/coverage.h"
#include "wmax/objectives/hardness.h"
#include "wmax/objectives/logistic_loss.h"
#include "wmax/objectives/lp_objective.h"
#include "wmax/objectives/quadratic_loss.h"

namespace wmax {

enum class Conditioning { kWell, kIll };

Conditioning ParseConditioning(const std::string& name);

struct RegressionOptions {
  int d = 100;
  int k = 0;  // 0 selects max(1, round(0.1 d))
  int n = 0;  // 0 selects floor(10 k ln d)
  Conditioning conditioning = Conditioning::kWell;
  double noise = 0.1;        // y = A x_true + noise * u
  double correlation = 0.3;  // equicorrelation of ill-conditioned rows
};

// Resolves the defaulted k and n of `options`.
RegressionOptions ResolveRegressionDefaults(RegressionOptions options);

struct SyntheticData {
  Eigen::MatrixXd design;
  Eigen::VectorXd response;  // y (regression) or labels in {-1, +1}
  Eigen::VectorXd x_true;    // first k entries 1, the rest 0
  Subset true_support;
};

// Rows of A are i.i.d. N(0, I) (well) or N(0, Sigma) with
// Sigma = (1 - rho) I + rho 1 1^T through its Cholesky factor (ill).
// Draw order from CounterRng(seed): A row by row, then the noise vector.
SyntheticData GenerateSyntheticRegression(const RegressionOptions& options,
                                          uint64_t seed);

// Same design and x_true, labels sign(A x_true + noise * u) with sign(0) = +1.
SyntheticData GenerateSyntheticClassification(const RegressionOptions& options,
                                              uint64_t seed);

QuadraticLossInstance ToQuadraticInstance(const SyntheticData& data);
LogisticLossInstance ToLogisticInstance(const SyntheticData& data,
                                        double ridge);

// A (m x d) and c uniform on [0, 1], b = 0.5 k (1, ..., 1). Draw order: c,
// then A row by row.
LpInstance GenerateLpInstance(int d, int m, int k, uint64_t seed);

// Unit-interval weights over `universe` elements; each group contains each
// element independently with probability `density` and at least one element.
CoverageInstance GenerateCoverageInstance(int d, int universe, double density,
                                          uint64_t seed);

// Hidden set drawn uniformly among the k-subsets of [d].
HardnessInstance GenerateHardnessInstance(int k, int r, int d, uint64_t seed);

}  // namespace wmax

#endif  // WMAX_BENCH_GENERATORS_H_
