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

#ifndef WMAX_OBJECTIVES_LP_OBJECTIVE_H_
#define WMAX_OBJECTIVES_LP_OBJECTIVE_H_

#include <Eigen/Dense>

#include "wmax/core/oracle.h"

namespace wmax {

// Production-planning LP  max { c^T x : A x <= b, 0 <= x <= 1 }.
struct LpInstance {
  Eigen::VectorXd profit;       // c, length d
  Eigen::MatrixXd constraints;  // A, m x d
  Eigen::VectorXd capacity;     // b, length m

  int dim() const { return static_cast<int>(profit.size()); }
  int rows() const { return static_cast<int>(constraints.rows()); }
};

// F(S) = max { c_S^T x_S : A x <= b, 0 <= x <= 1, supp(x) in S }.
//
// When every profit in S is nonnegative and x_S = 1 is feasible, that point
// is optimal and no simplex solve is needed. Otherwise the restricted LP,
// with the upper bounds as explicit rows, goes to SolveDenseLp.
class LpObjective : public SetFunctionOracle {
 public:
  // Throws DomainError on inconsistent dimensions.
  explicit LpObjective(LpInstance instance);

  int ground_size() const override { return instance_.dim(); }
  // Throws InfeasibleError if the restriction is infeasible (impossible when
  // b >= 0) and std::logic_error if it is unbounded.
  double Value(const Subset& s) const override;

  const LpInstance& instance() const { return instance_; }

 private:
  LpInstance instance_;
};

double LpObjectiveValue(const LpInstance& instance, const Subset& s);

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_LP_OBJECTIVE_H_
