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

#include "wmax/ratios/hardness_check.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "wmax/core/errors.h"
#include "wmax/guarantees/bounds.h"
#include "wmax/objectives/hardness.h"
#include "wmax/ratios/ratios.h"
#include "wmax/ratios/set_function_table.h"

namespace wmax {
namespace {

bool Close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

std::string Line(const char* key, double v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s = %.17g\n", key, v);
  return buf;
}

std::string Line(const char* key, bool v) {
  return std::string(key) + " = " + (v ? "true" : "false") + "\n";
}

}  // namespace

bool HardnessVerification::Passed(double tol) const {
  return monotone && property2 && property3 && property4 &&
         property5_error <= tol && submodular_small &&
         std::abs(gamma_k - 1.0) <= tol && beta_k >= spr_bound - tol;
}

std::string HardnessVerification::ToString() const {
  std::string out;
  out += "k = " + std::to_string(k) + "\n";
  out += "r = " + std::to_string(r) + "\n";
  out += "d = " + std::to_string(d) + "\n";
  out += Line("monotone", monotone);
  out += Line("property2", property2);
  out += Line("property3", property3);
  out += Line("property4", property4);
  out += Line("property5_error", property5_error);
  out += Line("submodular_small", submodular_small);
  out += Line("gamma_k", gamma_k);
  out += Line("beta_k", beta_k);
  out += Line("alpha", alpha);
  out += Line("spr_bound", spr_bound);
  out += Line("passed", Passed());
  return out;
}

HardnessVerification VerifyHardness(int k, int r, int d) {
  if (r < 1 || r > k) throw DomainError("VerifyHardness: need 1 <= r <= k");
  if (d < 2 * k || d > kMaxRatioGroundSize) {
    throw CapacityError("VerifyHardness: need 2k <= d <= " +
                        std::to_string(kMaxRatioGroundSize));
  }
  const HardnessOracle oracle(MakeHardnessInstance(k, r, d));
  const SetFunctionTable table = SetFunctionTable::Tabulate(oracle);
  const uint64_t hidden = oracle.instance().hidden.Mask();
  const uint64_t full = (uint64_t{1} << d) - 1;
  const double top =
      k * std::pow(static_cast<double>(k - r + 1), static_cast<double>(k - r));
  constexpr double kRel = 1e-12;

  HardnessVerification v;
  v.k = k;
  v.r = r;
  v.d = d;
  v.monotone = v.property2 = v.property3 = v.property4 = true;
  v.submodular_small = true;
  double max_small = -INFINITY;
  for (uint64_t s = 0; s <= full; ++s) {
    const int n = std::popcount(s);
    const int m = std::popcount(s & hidden);
    const double f = table[s];
    for (int j = 0; j < d; ++j) {
      const uint64_t bit = uint64_t{1} << j;
      if (!(s & bit) && table[s | bit] < f - kRel * std::max(1.0, f)) {
        v.monotone = false;
      }
    }
    if (m <= r && !Close(f, HardnessG(r, k, 0, n), kRel)) v.property2 = false;
    if (n <= k) max_small = std::max(max_small, f);
    if (n > 2 * k - r + 1 && !Close(f, top, kRel)) v.property4 = false;
    if (n >= 2 * k) continue;
    // Diminishing returns for every A subset of s and j outside s.
    for (uint64_t a = s;; a = (a - 1) & s) {
      for (int j = 0; j < d; ++j) {
        const uint64_t bit = uint64_t{1} << j;
        if (s & bit) continue;
        const double gain_a = table[a | bit] - table[a];
        const double gain_s = table[s | bit] - f;
        if (gain_s > gain_a + kRel * std::max(1.0, std::abs(gain_a))) {
          v.submodular_small = false;
        }
      }
      if (a == 0) break;
    }
  }
  const double g_kk = table[hidden];
  v.property3 = g_kk == top && max_small == g_kk;
  v.alpha = HardnessAlpha(k, r).raw;
  for (int m = 0; m <= r; ++m) {
    v.property5_error = std::max(
        v.property5_error, std::abs(HardnessG(r, k, m, k) / g_kk - v.alpha));
  }
  v.gamma_k = UniformSubmodularityRatio(table, k, k).value;
  v.beta_k = UniformSupermodularityRatio(table, k, k).value;
  v.spr_bound = HardnessSprBound(k, r).raw;
  return v;
}

}  // namespace wmax
