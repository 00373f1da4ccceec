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

#include "wmax/ratios/spectral.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

constexpr int64_t kChunk = 256;

int SupportSize(const Eigen::MatrixXd& hessian, int s1, int s2) {
  if (hessian.rows() != hessian.cols()) {
    throw DomainError("ComputeRscRsm: Hessian must be square");
  }
  if (s1 < 1 || s2 < 1) throw DomainError("ComputeRscRsm: need s1, s2 >= 1");
  const int d = static_cast<int>(hessian.rows());
  if (d < 1) throw DomainError("ComputeRscRsm: empty Hessian");
  const int t = std::min({2 * s1, s2, d});
  if (Binomial(d, t) > kMaxSpectralSupports) {
    throw CapacityError("ComputeRscRsm: C(" + std::to_string(d) + ", " +
                        std::to_string(t) + ") supports exceed the cap");
  }
  return t;
}

// (lambda_min, lambda_max) of the principal submatrix on `support`.
std::pair<double, double> ExtremeEigenvalues(const Eigen::MatrixXd& h,
                                             const std::vector<int>& support) {
  const int t = static_cast<int>(support.size());
  Eigen::MatrixXd sub(t, t);
  for (int a = 0; a < t; ++a) {
    for (int b = 0; b < t; ++b) sub(a, b) = h(support[a], support[b]);
  }
  if (t == 1) return {sub(0, 0), sub(0, 0)};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sub,
                                                     Eigen::EigenvaluesOnly);
  return {eig.eigenvalues()(0), eig.eigenvalues()(t - 1)};
}

double LambdaMin(const Eigen::MatrixXd& h, const Subset& s) {
  std::vector<int> support(s.begin(), s.end());
  return ExtremeEigenvalues(h, support).first;
}

double LambdaMax(const Eigen::MatrixXd& h, const Subset& s) {
  std::vector<int> support(s.begin(), s.end());
  return ExtremeEigenvalues(h, support).second;
}

}  // namespace

RscRsmConstants ComputeRscRsm(const Eigen::MatrixXd& hessian, int s1, int s2) {
  const int t = SupportSize(hessian, s1, s2);
  const int d = static_cast<int>(hessian.rows());
  const int64_t total = static_cast<int64_t>(Binomial(d, t));
  const int64_t chunks = (total + kChunk - 1) / kChunk;
  double mu = std::numeric_limits<double>::infinity();
  double nu = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(dynamic) reduction(min : mu) \
    reduction(max : nu)
  for (int64_t c = 0; c < chunks; ++c) {
    std::vector<int> combo;
    UnrankCombination(d, t, static_cast<uint64_t>(c * kChunk), &combo);
    const int64_t end = std::min(total, (c + 1) * kChunk);
    for (int64_t rank = c * kChunk; rank < end; ++rank) {
      const auto [lo, hi] = ExtremeEigenvalues(hessian, combo);
      mu = std::min(mu, lo);
      nu = std::max(nu, hi);
      NextCombination(d, &combo);
    }
  }
  return {s1, s2, t, mu, nu};
}

RscRsmConstants ComputeRscRsm(const QuadraticLossInstance& instance, int s1,
                              int s2) {
  return ComputeRscRsm(QuadraticLoss(instance).hessian(), s1, s2);
}

SpectralRatioBounds RatioBoundsFromSpectrum(double mu_gamma, double nu_gamma,
                                            double mu_beta, double nu_beta) {
  if (!(mu_gamma > 0) || !(mu_beta > 0)) {
    throw DomainError("RatioBoundsFromSpectrum: mu must be positive");
  }
  if (!(nu_gamma > 0) || !(nu_beta > 0)) {
    throw DomainError("RatioBoundsFromSpectrum: nu must be positive");
  }
  return {mu_gamma / nu_gamma, mu_beta / nu_beta};
}

SpectralRatioBounds SpectralRatioBoundsFor(const Eigen::MatrixXd& hessian,
                                           int u, int s) {
  if (u < 0 || s < 1) throw DomainError("SpectralRatioBoundsFor: bad u or s");
  const double mu_gamma = ComputeRscRsm(hessian, u + s, u + s).mu;
  const double nu_gamma = ComputeRscRsm(hessian, u + 1, 1).nu;
  const double mu_beta = ComputeRscRsm(hessian, u + 1, u + 1).mu;
  const double nu_beta = ComputeRscRsm(hessian, u + s, s).nu;
  return RatioBoundsFromSpectrum(mu_gamma, nu_gamma, mu_beta, nu_beta);
}

bool SandwichResult::Holds(double rel_slack) const {
  const double scale = std::max({std::abs(lower), std::abs(delta), 1e-300});
  if (lower > delta + rel_slack * scale) return false;
  if (std::isinf(upper)) return true;
  const double upper_scale = std::max({std::abs(upper), std::abs(delta), 1e-300});
  return delta <= upper + rel_slack * upper_scale;
}

SandwichResult GradientSandwichCheck(const QuadraticLoss& loss, const Subset& a,
                                     const Subset& b) {
  if (!a.IsDisjointFrom(b)) {
    throw DomainError("GradientSandwichCheck: A and B must be disjoint");
  }
  SandwichResult out;
  if (b.empty()) return out;
  const Subset both = a.Union(b);
  const Eigen::VectorXd grad = loss.Gradient(loss.RestrictedArgmin(a));
  double g_sq = 0.0;
  for (int j : b) g_sq += grad(j) * grad(j);
  out.nu = LambdaMax(loss.hessian(), b);
  out.mu = LambdaMin(loss.hessian(), both);
  out.delta = loss.LossReduction(both) - loss.LossReduction(a);
  out.lower = out.nu > 0 ? g_sq / (2 * out.nu) : 0.0;
  out.upper = out.mu > 0 ? g_sq / (2 * out.mu)
                         : (g_sq > 0 ? std::numeric_limits<double>::infinity()
                                     : 0.0);
  return out;
}

namespace serial {

RscRsmConstants ComputeRscRsm(const Eigen::MatrixXd& hessian, int s1, int s2) {
  const int t = SupportSize(hessian, s1, s2);
  const int d = static_cast<int>(hessian.rows());
  RscRsmConstants out{s1, s2, t, std::numeric_limits<double>::infinity(),
                      -std::numeric_limits<double>::infinity()};
  ForEachCombination(d, t, [&](std::span<const int> combo) {
    Eigen::MatrixXd sub(t, t);
    for (int a = 0; a < t; ++a) {
      for (int b = 0; b < t; ++b) sub(a, b) = hessian(combo[a], combo[b]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sub,
                                                       Eigen::EigenvaluesOnly);
    out.mu = std::min(out.mu, eig.eigenvalues()(0));
    out.nu = std::max(out.nu, eig.eigenvalues()(t - 1));
  });
  return out;
}

}  // namespace serial
}  // namespace wmax
