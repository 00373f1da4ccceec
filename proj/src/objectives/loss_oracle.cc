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

#include <algorithm>
#include <cmath>

#include "wmax/objectives/smooth_loss.h"

namespace wmax {

double SmoothLoss::LossAtZero() const {
  return Loss(Eigen::VectorXd::Zero(dim()));
}

double SmoothLoss::LossReduction(const Subset& s) const {
  if (s.empty()) return 0.0;
  return LossAtZero() - Loss(RestrictedArgmin(s));
}

double LossReductionOracle::Value(const Subset& s) const {
  CheckGroundSize(s);
  return std::max(0.0, loss_.LossReduction(s));
}

double PowerIterationLambdaMax(const Eigen::MatrixXd& sym, double tol,
                               int max_iter) {
  const Eigen::Index n = sym.rows();
  if (n == 0) return 0.0;
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / std::sqrt(double(n));
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd w = sym * v;
    const double norm = w.norm();
    if (norm == 0.0) {
      // The start vector lies in the null space; probe the diagonal instead.
      return std::max(0.0, sym.diagonal().maxCoeff());
    }
    const double next = v.dot(w);
    v = w / norm;
    if (it > 0 && std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next))) {
      return next;
    }
    lambda = next;
  }
  return lambda;
}

Eigen::VectorXd Scatter(const Subset& s, const Eigen::VectorXd& restricted) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(s.ground_size());
  for (int i = 0; i < s.size(); ++i) full(s[i]) = restricted(i);
  return full;
}

}  // namespace wmax
