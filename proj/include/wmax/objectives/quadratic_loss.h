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

#ifndef WMAX_OBJECTIVES_QUADRATIC_LOSS_H_
#define WMAX_OBJECTIVES_QUADRATIC_LOSS_H_

#include <Eigen/Dense>

#include "wmax/objectives/smooth_loss.h"

namespace wmax {

// Square loss l(x) = ||y - A x||^2 / (2n) over an n x d design matrix.
struct QuadraticLossInstance {
  Eigen::MatrixXd design;
  Eigen::VectorXd target;

  int samples() const { return static_cast<int>(design.rows()); }
  int dim() const { return static_cast<int>(design.cols()); }
};

// Square loss with the Gram matrix H = A^T A / n and c = A^T y / n cached, so
// restricted solves cost O(|S|^3) independent of n.
class QuadraticLoss : public SmoothLoss {
 public:
  explicit QuadraticLoss(QuadraticLossInstance instance);

  int dim() const override { return instance_.dim(); }
  double Loss(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd Gradient(const Eigen::VectorXd& x) const override;

  // Solves H_SS x_S = c_S by LDL^T; falls back to the least-norm solution
  // (eigenvalue cutoff 1e-12 * largest) when H_SS is numerically singular.
  Eigen::VectorXd RestrictedArgmin(const Subset& s) const override;

  // c_S^T x_S - x_S^T H_SS x_S / 2 at the restricted minimizer.
  double LossReduction(const Subset& s) const override;

  // lambda_max(H) by power iteration.
  double SmoothnessConstant() const override { return smoothness_; }

  const QuadraticLossInstance& instance() const { return instance_; }
  const Eigen::MatrixXd& hessian() const { return gram_; }
  const Eigen::VectorXd& correlation() const { return correlation_; }

 private:
  Eigen::VectorXd SolveRestricted(const Subset& s) const;

  QuadraticLossInstance instance_;
  Eigen::MatrixXd gram_;
  Eigen::VectorXd correlation_;
  double smoothness_;
};

// Convenience entry points that build a QuadraticLoss for a single query.
Eigen::VectorXd RestrictedArgminQuadratic(const QuadraticLossInstance& instance,
                                          const Subset& s);
double QuadraticObjective(const QuadraticLossInstance& instance,
                          const Subset& s);

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_QUADRATIC_LOSS_H_
