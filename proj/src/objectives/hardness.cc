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

#include "wmax/objectives/hardness.h"

#include <cmath>
#include <string>
#include <vector>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

long double IntPow(long double base, int exponent) {
  long double result = 1.0L;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

double HardnessH(int ell, int k, int m, int n) {
  if (ell < 1 || ell > k || ell > kMaxHardnessEll) {
    throw DomainError("HardnessH: need 1 <= ell <= k (ell <= " +
                      std::to_string(kMaxHardnessEll) + ")");
  }
  if (m < 0 || m > ell || n < m) {
    throw DomainError("HardnessH: need 0 <= m <= ell and m <= n (m = " +
                      std::to_string(m) + ", n = " + std::to_string(n) + ")");
  }
  const long double l = ell;
  const long double top = IntPow(l, ell);
  if (n > k + ell) return static_cast<double>(top);
  const long double shrink = IntPow(1.0L - 1.0L / l, n - m);
  return static_cast<double>(top - IntPow(l, ell - 1) * (l - m) * shrink);
}

double HardnessG(int r, int k, int m, int n) {
  if (r < 1 || r > k) throw DomainError("HardnessG: need 1 <= r <= k");
  if (m < 0 || n < 0 || m > n || m > k) {
    throw DomainError("HardnessG: need 0 <= m <= min(n, k) (m = " +
                      std::to_string(m) + ", n = " + std::to_string(n) + ")");
  }
  const int ell = k - r + 1;
  const double unit = HardnessH(ell, ell, 0, 1);
  if (n <= r) return n * unit;
  if (m <= r) return (r - 1) * unit + HardnessH(ell, ell, 0, n - r + 1);
  return (r - 1) * unit + HardnessH(ell, ell, m - r + 1, n - r + 1);
}

HardnessInstance MakeHardnessInstance(int k, int r, int d) {
  if (k < 1 || d < 2 * k) {
    throw DomainError("MakeHardnessInstance: need k >= 1 and d >= 2k");
  }
  std::vector<int> hidden(k);
  for (int j = 0; j < k; ++j) hidden[j] = j;
  return HardnessInstance{k, r, Subset(d, std::move(hidden))};
}

HardnessOracle::HardnessOracle(HardnessInstance instance)
    : instance_(std::move(instance)) {
  const int k = instance_.k;
  if (instance_.hidden.size() != k) {
    throw DomainError("HardnessInstance: |M| must equal k");
  }
  if (instance_.r < 1 || instance_.r > k) {
    throw DomainError("HardnessInstance: need 1 <= r <= k");
  }
  if (instance_.dim() < 2 * k) {
    throw DomainError("HardnessInstance: need d >= 2k");
  }
}

double HardnessOracle::Value(const Subset& s) const {
  CheckGroundSize(s);
  const int m = s.Intersection(instance_.hidden).size();
  return HardnessG(instance_.r, instance_.k, m, s.size());
}

}  // namespace wmax
