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

#ifndef WMAX_OBJECTIVES_LOGISTIC_LOSS_H_
#define WMAX_OBJECTIVES_LOGISTIC_LOSS_H_

#include <Eigen/Dense>

#include "wmax/objectives/smooth_loss.h"

namespace wmax {

// Ridge-regularized logistic loss
//   l(x) = (1/n) sum_i log(1 + exp(-y_i (A x)_i)) + (lambda/2) ||x||^2
// with labels y_i in {-1, +1}.
struct LogisticLossInstance {
  Eigen::MatrixXd design;
  Eigen::VectorXd labels;
  double ridge = 0.0;

  int samples() const { return static_cast<int>(design.rows()); }
  int dim() const { return static_cast<int>(design.cols()); }
};

struct NewtonOptions {
  double gradient_tol = 1e-10;  // on the restricted gradient, inf-norm
  int max_iter = 200;
};

class LogisticLoss : public SmoothLoss {
 public:
  explicit LogisticLoss(LogisticLossInstance instance,
                        NewtonOptions options = {});

  int dim() const override { return instance_.dim(); }
  double Loss(const Eigen::VectorXd& x) const override;
  Eigen::VectorXd Gradient(const Eigen::VectorXd& x) const override;

  // Damped Newton on the coordinates in S, starting from 0. Each step is
  // halved until the loss does not increase. Throws ConvergenceError
  // (carrying the final restricted gradient norm) after max_iter iterations.
  Eigen::VectorXd RestrictedArgmin(const Subset& s) const override;

  // lambda_max(A^T A / (4n)) + lambda.
  double SmoothnessConstant() const override { return smoothness_; }

  const LogisticLossInstance& instance() const { return instance_; }

 private:
  LogisticLossInstance instance_;
  NewtonOptions options_;
  double smoothness_;
};

Eigen::VectorXd RestrictedArgminLogistic(const LogisticLossInstance& instance,
                                         const Subset& s);

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_LOGISTIC_LOSS_H_
