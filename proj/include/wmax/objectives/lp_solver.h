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

#ifndef WMAX_OBJECTIVES_LP_SOLVER_H_
#define WMAX_OBJECTIVES_LP_SOLVER_H_

#include <Eigen/Dense>

namespace wmax {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  double objective = 0.0;
  Eigen::VectorXd x;
  int pivots = 0;
};

// Dense two-phase primal simplex on the slack formulation of
//   maximize c^T x  subject to  A x <= b,  x >= 0.
// Entering and leaving variables follow Bland's rule (smallest eligible
// index), which rules out cycling. Rows with b_i < 0 receive an artificial
// variable and are handled by phase one. `tol` is used for both the
// feasibility and the optimality tests.
LpSolution SolveDenseLp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                        const Eigen::VectorXd& c, double tol = 1e-9);

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_LP_SOLVER_H_
