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

#include "wmax/objectives/logistic_loss.h"

#include <cmath>
#include <string>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

// log(1 + exp(-t)) without overflow.
double LogOnePlusExpNeg(double t) {
  return t > 0 ? std::log1p(std::exp(-t)) : -t + std::log1p(std::exp(t));
}

// 1 / (1 + exp(-t)).
double Sigmoid(double t) {
  if (t >= 0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

}  // namespace

LogisticLoss::LogisticLoss(LogisticLossInstance instance, NewtonOptions options)
    : instance_(std::move(instance)), options_(options) {
  const int n = instance_.samples();
  if (n <= 0) throw DomainError("LogisticLoss: need at least one sample");
  if (instance_.labels.size() != n) {
    throw DomainError("LogisticLoss: label count does not match design rows");
  }
  for (int i = 0; i < n; ++i) {
    const double y = instance_.labels(i);
    if (y != 1.0 && y != -1.0) {
      throw DomainError("LogisticLoss: labels must be -1 or +1 (row " +
                        std::to_string(i) + ")");
    }
  }
  if (instance_.ridge < 0) throw DomainError("LogisticLoss: negative ridge");
  const Eigen::MatrixXd gram =
      instance_.design.transpose() * instance_.design / (4.0 * n);
  smoothness_ = PowerIterationLambdaMax(gram) + instance_.ridge;
}

double LogisticLoss::Loss(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd margins =
      instance_.labels.cwiseProduct(instance_.design * x);
  double total = 0.0;
  for (Eigen::Index i = 0; i < margins.size(); ++i) {
    total += LogOnePlusExpNeg(margins(i));
  }
  return total / instance_.samples() + 0.5 * instance_.ridge * x.squaredNorm();
}

Eigen::VectorXd LogisticLoss::Gradient(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd margins =
      instance_.labels.cwiseProduct(instance_.design * x);
  Eigen::VectorXd weights(margins.size());
  for (Eigen::Index i = 0; i < margins.size(); ++i) {
    weights(i) = -instance_.labels(i) * Sigmoid(-margins(i));
  }
  return instance_.design.transpose() * weights / instance_.samples() +
         instance_.ridge * x;
}

Eigen::VectorXd LogisticLoss::RestrictedArgmin(const Subset& s) const {
  if (s.ground_size() != dim()) {
    throw DomainError("LogisticLoss: subset ground size mismatch");
  }
  const int d = dim();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
  if (s.empty()) return x;

  const int n = instance_.samples();
  const int k = s.size();
  Eigen::MatrixXd sub(n, k);
  for (int a = 0; a < k; ++a) sub.col(a) = instance_.design.col(s[a]);

  Eigen::VectorXd coef = Eigen::VectorXd::Zero(k);
  auto restricted_loss = [&](const Eigen::VectorXd& c) {
    const Eigen::VectorXd margins = instance_.labels.cwiseProduct(sub * c);
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += LogOnePlusExpNeg(margins(i));
    return total / n + 0.5 * instance_.ridge * c.squaredNorm();
  };

  double loss = restricted_loss(coef);
  double grad_norm = 0.0;
  for (int it = 0; it <= options_.max_iter; ++it) {
    const Eigen::VectorXd margins = instance_.labels.cwiseProduct(sub * coef);
    Eigen::VectorXd g_weights(n);
    Eigen::VectorXd h_weights(n);
    for (int i = 0; i < n; ++i) {
      const double p = Sigmoid(-margins(i));
      g_weights(i) = -instance_.labels(i) * p;
      h_weights(i) = p * (1.0 - p);
    }
    const Eigen::VectorXd grad =
        sub.transpose() * g_weights / n + instance_.ridge * coef;
    grad_norm = grad.lpNorm<Eigen::Infinity>();
    if (grad_norm < options_.gradient_tol) return Scatter(s, coef);
    if (it == options_.max_iter) break;

    Eigen::MatrixXd hess =
        sub.transpose() * h_weights.asDiagonal() * sub / n;
    hess.diagonal().array() += instance_.ridge;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
    Eigen::VectorXd step = ldlt.solve(grad);
    if (ldlt.info() != Eigen::Success || !step.allFinite()) step = grad;

    double scale = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving) {
      const Eigen::VectorXd trial = coef - scale * step;
      const double trial_loss = restricted_loss(trial);
      if (trial_loss <= loss) {
        coef = trial;
        loss = trial_loss;
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) break;
  }
  throw ConvergenceError(
      "logistic Newton solve did not converge (restricted gradient inf-norm " +
          std::to_string(grad_norm) + ")",
      grad_norm);
}

Eigen::VectorXd RestrictedArgminLogistic(const LogisticLossInstance& instance,
                                         const Subset& s) {
  return LogisticLoss(instance).RestrictedArgmin(s);
}

}  // namespace wmax
