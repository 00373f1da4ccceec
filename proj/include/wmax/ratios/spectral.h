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

#ifndef WMAX_RATIOS_SPECTRAL_H_
#define WMAX_RATIOS_SPECTRAL_H_

#include <cstdint>

#include <Eigen/Dense>

#include "wmax/core/subset.h"
#include "wmax/objectives/quadratic_loss.h"

namespace wmax {

// Cap on the number of principal submatrices one constant may examine.
inline constexpr uint64_t kMaxSpectralSupports = 2000000;

// Restricted strong convexity / smoothness constants of a quadratic loss.
struct RscRsmConstants {
  int s1 = 0;
  int s2 = 0;
  int support_size = 0;  // t = min(2 s1, s2, d)
  double mu = 0.0;
  double nu = 0.0;

  double condition_number() const { return nu / mu; }
};

// For l(x) = ||y - Ax||^2 / (2n) the Bregman remainder is
// (y - x)^T H (y - x) / 2 with H = A^T A / n, so mu_{s1,s2} and nu_{s1,s2} are
// the extreme Rayleigh quotients of H over difference vectors y - x with
// ||x||_0, ||y||_0 <= s1 and ||y - x||_0 <= s2. Those differences are exactly
// the vectors with support size <= t = min(2 s1, s2, d), and by eigenvalue
// interlacing the extremes are attained on supports of size exactly t:
//   mu = min_{|D| = t} lambda_min(H_DD),  nu = max_{|D| = t} lambda_max(H_DD).
// Throws CapacityError when C(d, t) > kMaxSpectralSupports.
RscRsmConstants ComputeRscRsm(const Eigen::MatrixXd& hessian, int s1, int s2);
RscRsmConstants ComputeRscRsm(const QuadraticLossInstance& instance, int s1,
                              int s2);

struct SpectralRatioBounds {
  double gamma_lower = 0.0;
  double beta_lower = 0.0;
};

// gamma_{U,s} >= mu_gamma / nu_gamma and beta_{U,s} >= mu_beta / nu_beta.
// Throws DomainError on nonpositive mu or nu.
SpectralRatioBounds RatioBoundsFromSpectrum(double mu_gamma, double nu_gamma,
                                            double mu_beta, double nu_beta);
inline SpectralRatioBounds RatioBoundsFromSpectrum(double mu, double nu) {
  return RatioBoundsFromSpectrum(mu, nu, mu, nu);
}

// The closed-form bounds for |U| = u:
//   gamma_{U,s} >= mu_{u+s} / nu_{u+1,1},  beta_{U,s} >= mu_{u+1} / nu_{u+s,s}.
SpectralRatioBounds SpectralRatioBoundsFor(const Eigen::MatrixXd& hessian,
                                           int u, int s);

// Two-sided estimate of Delta F(B|A) from the gradient at the restricted
// minimizer b^A, with constants on the exact supports:
//   ||g_B||^2 / (2 nu) <= Delta F(B|A) <= ||g_B||^2 / (2 mu),
// nu = lambda_max(H_BB), mu = lambda_min(H_{A u B}).
struct SandwichResult {
  double lower = 0.0;
  double delta = 0.0;
  double upper = 0.0;
  double mu = 0.0;
  double nu = 0.0;

  // lower <= delta <= upper up to `rel_slack` relative to the larger side.
  bool Holds(double rel_slack = 1e-8) const;
};

// Requires A and B disjoint (DomainError otherwise).
SandwichResult GradientSandwichCheck(const QuadraticLoss& loss, const Subset& a,
                                     const Subset& b);

namespace serial {

// Single-threaded reference for ComputeRscRsm.
RscRsmConstants ComputeRscRsm(const Eigen::MatrixXd& hessian, int s1, int s2);

}  // namespace serial
}  // namespace wmax

#endif  // WMAX_RATIOS_SPECTRAL_H_
