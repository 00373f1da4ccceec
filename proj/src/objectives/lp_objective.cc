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

#include "wmax/objectives/lp_objective.h"

#include <stdexcept>

#include "wmax/core/errors.h"
#include "wmax/objectives/lp_solver.h"

namespace wmax {

LpObjective::LpObjective(LpInstance instance) : instance_(std::move(instance)) {
  if (instance_.constraints.cols() != instance_.dim() ||
      instance_.capacity.size() != instance_.rows()) {
    throw DomainError("LpInstance: dimension mismatch");
  }
}

double LpObjective::Value(const Subset& s) const {
  CheckGroundSize(s);
  if (s.empty()) {
    if ((instance_.capacity.array() < 0).any()) {
      throw InfeasibleError("LP restricted to the empty set is infeasible");
    }
    return 0.0;
  }
  const int k = s.size();
  const int m = instance_.rows();

  bool all_ones_feasible = true;
  Eigen::VectorXd load = Eigen::VectorXd::Zero(m);
  for (int j : s) {
    if (instance_.profit(j) < 0) all_ones_feasible = false;
    load += instance_.constraints.col(j);
  }
  if (all_ones_feasible &&
      (load.array() <= instance_.capacity.array()).all()) {
    double total = 0.0;
    for (int j : s) total += instance_.profit(j);
    return total;
  }

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m + k, k);
  Eigen::VectorXd b(m + k);
  Eigen::VectorXd c(k);
  for (int col = 0; col < k; ++col) {
    a.block(0, col, m, 1) = instance_.constraints.col(s[col]);
    a(m + col, col) = 1.0;
    c(col) = instance_.profit(s[col]);
  }
  b.head(m) = instance_.capacity;
  b.tail(k).setOnes();

  const LpSolution solution = SolveDenseLp(a, b, c);
  switch (solution.status) {
    case LpStatus::kInfeasible:
      throw InfeasibleError("restricted LP is infeasible for S = " +
                            s.ToString());
    case LpStatus::kUnbounded:
      throw std::logic_error("restricted LP reported unbounded despite box");
    case LpStatus::kOptimal:
      break;
  }
  return solution.objective;
}

double LpObjectiveValue(const LpInstance& instance, const Subset& s) {
  return LpObjective(instance).Value(s);
}

}  // namespace wmax
