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

#ifndef WMAX_RATIOS_HARDNESS_CHECK_H_
#define WMAX_RATIOS_HARDNESS_CHECK_H_

#include <string>

namespace wmax {

// Exhaustive audit of the hidden-set hardness objective over all subsets of
// [d] with hidden set {0, ..., k-1}.
struct HardnessVerification {
  int k = 0;
  int r = 0;
  int d = 0;
  bool monotone = false;
  bool property2 = false;  // G(0, n) = ... = G(r, n)
  bool property3 = false;  // max over n <= k is G(k, k) = k (k-r+1)^(k-r)
  bool property4 = false;  // G(m, n) = G(k, k) once n > 2k - r + 1
  double property5_error = 0.0;  // max_m<=r |G(m, k)/G(k, k) - alpha|
  bool submodular_small = false;  // diminishing returns on sets of size <= 2k
  double gamma_k = 0.0;
  double beta_k = 0.0;
  double alpha = 0.0;
  double spr_bound = 0.0;

  bool Passed(double tol = 1e-12) const;
  std::string ToString() const;
};

// Requires 1 <= r <= k, 2k <= d <= 14.
HardnessVerification VerifyHardness(int k, int r, int d);

}  // namespace wmax

#endif  // WMAX_RATIOS_HARDNESS_CHECK_H_
