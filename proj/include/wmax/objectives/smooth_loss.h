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

#ifndef WMAX_OBJECTIVES_SMOOTH_LOSS_H_
#define WMAX_OBJECTIVES_SMOOTH_LOSS_H_

#include <Eigen/Dense>

#include "wmax/core/oracle.h"
#include "wmax/core/subset.h"

namespace wmax {

// A differentiable convex loss l: R^d -> R whose support-restricted minimizer
// can be computed. Implementations are immutable and reentrant.
class SmoothLoss {
 public:
  virtual ~SmoothLoss() = default;

  virtual int dim() const = 0;
  virtual double Loss(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd Gradient(const Eigen::VectorXd& x) const = 0;

  // argmin { l(x) : supp(x) in S }, as a full d-vector.
  virtual Eigen::VectorXd RestrictedArgmin(const Subset& s) const = 0;

  // l(0) - min_{supp(x) in S} l(x). Subclasses may override with a more
  // accurate closed form.
  virtual double LossReduction(const Subset& s) const;

  // Global smoothness estimate L used for the default 1/L projected-gradient
  // step.
  virtual double SmoothnessConstant() const = 0;

  double LossAtZero() const;
};

// F(S) = l(0) - min_{supp(x) in S} l(x), clamped at 0 against round-off.
class LossReductionOracle : public SetFunctionOracle {
 public:
  explicit LossReductionOracle(const SmoothLoss& loss) : loss_(loss) {}

  int ground_size() const override { return loss_.dim(); }
  double Value(const Subset& s) const override;

  const SmoothLoss& loss() const { return loss_; }

 private:
  const SmoothLoss& loss_;
};

// Largest eigenvalue of a symmetric PSD matrix by power iteration from the
// all-ones direction (relative tolerance `tol`, at most `max_iter` steps).
double PowerIterationLambdaMax(const Eigen::MatrixXd& sym, double tol = 1e-8,
                               int max_iter = 500);

// Copies x_S into a full-length vector, zero elsewhere.
Eigen::VectorXd Scatter(const Subset& s, const Eigen::VectorXd& restricted);

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_SMOOTH_LOSS_H_
