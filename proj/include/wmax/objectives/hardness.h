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

#ifndef WMAX_OBJECTIVES_HARDNESS_H_
#define WMAX_OBJECTIVES_HARDNESS_H_

#include "wmax/core/oracle.h"
#include "wmax/core/subset.h"

namespace wmax {

// Largest ell accepted by HardnessH; ell^ell stays finite in double up to
// ell = 143, and the values are exact integers-times-powers for ell <= 25.
inline constexpr int kMaxHardnessEll = 140;

// H^ell(m, n) = ell^ell - ell^(ell-1) (ell - m) (1 - 1/ell)^(n - m) for
// n <= k + ell, and ell^ell beyond that. Requires 1 <= ell <= k,
// 0 <= m <= ell and m <= n; throws DomainError otherwise.
double HardnessH(int ell, int k, int m, int n);

// G_r^k(m, n) with ell = k - r + 1:
//   n <= r:       n H(0, 1)
//   m <= r <= n:  (r - 1) H(0, 1) + H(0, n - r + 1)
//   r <= m:       (r - 1) H(0, 1) + H(m - r + 1, n - r + 1)
// where H is HardnessH with sparsity argument ell, so H saturates once
// n > 2k - r + 1. Requires 1 <= r <= k, 0 <= m <= min(n, k).
double HardnessG(int r, int k, int m, int n);

// Hidden-set instance: F(S) = G_r^k(|S n M|, |S|) over [d] with |M| = k.
struct HardnessInstance {
  int k = 1;
  int r = 1;
  Subset hidden;  // M, over ground set [d]

  int dim() const { return hidden.ground_size(); }
};

// Instance whose hidden set is {0, ..., k-1}.
HardnessInstance MakeHardnessInstance(int k, int r, int d);

class HardnessOracle : public SetFunctionOracle {
 public:
  // Requires |M| = k, 1 <= r <= k and d >= 2k.
  explicit HardnessOracle(HardnessInstance instance);

  int ground_size() const override { return instance_.dim(); }
  double Value(const Subset& s) const override;

  const HardnessInstance& instance() const { return instance_; }

 private:
  HardnessInstance instance_;
};

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_HARDNESS_H_
