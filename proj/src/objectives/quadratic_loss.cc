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

#include "wmax/objectives/quadratic_loss.h"

#include <string>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

constexpr double kSingularCutoff = 1e-12;

Eigen::MatrixXd Restrict(const Eigen::MatrixXd& m, const Subset& s) {
  Eigen::MatrixXd out(s.size(), s.size());
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) out(a, b) = m(s[a], s[b]);
  }
  return out;
}

Eigen::VectorXd Restrict(const Eigen::VectorXd& v, const Subset& s) {
  Eigen::VectorXd out(s.size());
  for (int a = 0; a < s.size(); ++a) out(a) = v(s[a]);
  return out;
}

}  // namespace

QuadraticLoss::QuadraticLoss(QuadraticLossInstance instance)
    : instance_(std::move(instance)) {
  const int n = instance_.samples();
  if (n <= 0) throw DomainError("QuadraticLoss: need at least one sample");
  if (instance_.target.size() != n) {
    throw DomainError("QuadraticLoss: target has " +
                      std::to_string(instance_.target.size()) +
                      " entries, design has " + std::to_string(n) + " rows");
  }
  gram_ = instance_.design.transpose() * instance_.design / double(n);
  correlation_ = instance_.design.transpose() * instance_.target / double(n);
  smoothness_ = PowerIterationLambdaMax(gram_);
}

double QuadraticLoss::Loss(const Eigen::VectorXd& x) const {
  return (instance_.target - instance_.design * x).squaredNorm() /
         (2.0 * instance_.samples());
}

Eigen::VectorXd QuadraticLoss::Gradient(const Eigen::VectorXd& x) const {
  return gram_ * x - correlation_;
}

Eigen::VectorXd QuadraticLoss::SolveRestricted(const Subset& s) const {
  if (s.ground_size() != dim()) {
    throw DomainError("QuadraticLoss: subset ground size mismatch");
  }
  if (s.empty()) return Eigen::VectorXd();
  const Eigen::MatrixXd h = Restrict(gram_, s);
  const Eigen::VectorXd c = Restrict(correlation_, s);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
  if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
    const Eigen::VectorXd pivots = ldlt.vectorD();
    const double largest = pivots.cwiseAbs().maxCoeff();
    if (largest > 0.0 && pivots.minCoeff() > kSingularCutoff * largest) {
      return ldlt.solve(c);
    }
  }
  // Least-norm solution of the (singular) normal equations.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
  const Eigen::VectorXd& values = eig.eigenvalues();
  const double cutoff = kSingularCutoff * std::max(0.0, values.maxCoeff());
  Eigen::VectorXd coeffs = eig.eigenvectors().transpose() * c;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    coeffs(i) = values(i) > cutoff ? coeffs(i) / values(i) : 0.0;
  }
  return eig.eigenvectors() * coeffs;
}

Eigen::VectorXd QuadraticLoss::RestrictedArgmin(const Subset& s) const {
  return Scatter(s, SolveRestricted(s));
}

double QuadraticLoss::LossReduction(const Subset& s) const {
  if (s.empty()) return 0.0;
  const Eigen::VectorXd x = SolveRestricted(s);
  const Eigen::VectorXd c = Restrict(correlation_, s);
  const Eigen::MatrixXd h = Restrict(gram_, s);
  return c.dot(x) - 0.5 * x.dot(h * x);
}

Eigen::VectorXd RestrictedArgminQuadratic(const QuadraticLossInstance& instance,
                                          const Subset& s) {
  return QuadraticLoss(instance).RestrictedArgmin(s);
}

double QuadraticObjective(const QuadraticLossInstance& instance,
                          const Subset& s) {
  QuadraticLoss loss(instance);
  return LossReductionOracle(loss).Value(s);
}

}  // namespace wmax
