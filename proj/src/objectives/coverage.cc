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

#include "wmax/objectives/coverage.h"

#include <algorithm>
#include <string>

#include "wmax/core/errors.h"

namespace wmax {

CoverageOracle::CoverageOracle(CoverageInstance instance)
    : instance_(std::move(instance)) {
  if (static_cast<int>(instance_.weights.size()) != instance_.universe_size) {
    throw DomainError("CoverageInstance: expected " +
                      std::to_string(instance_.universe_size) + " weights");
  }
  for (double w : instance_.weights) {
    if (!(w >= 0)) throw DomainError("CoverageInstance: negative weight");
  }
  for (auto& group : instance_.groups) {
    for (int v : group) {
      if (v < 0 || v >= instance_.universe_size) {
        throw DomainError("CoverageInstance: element " + std::to_string(v) +
                          " outside the universe");
      }
    }
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
  }
}

double CoverageOracle::Value(const Subset& s) const {
  CheckGroundSize(s);
  std::vector<char> covered(instance_.universe_size, 0);
  double total = 0.0;
  for (int j : s) {
    for (int v : instance_.groups[j]) {
      if (covered[v]) continue;
      covered[v] = 1;
      total += instance_.weights[v];
    }
  }
  return total;
}

double CoverageValue(const CoverageInstance& instance, const Subset& s) {
  return CoverageOracle(instance).Value(s);
}

CoverageInstance TriangleCoverage() {
  return CoverageInstance{3, {1.0, 1.0, 1.0}, {{0, 1}, {1, 2}, {0, 2}}};
}

CoverageInstance SingleStageGapCoverage(int k, double eps) {
  if (k < 1) throw DomainError("SingleStageGapCoverage: k must be positive");
  if (!(eps > 0)) throw DomainError("SingleStageGapCoverage: eps must be > 0");
  CoverageInstance inst;
  inst.universe_size = 2 * k;
  inst.weights.assign(2 * k, 1.0);
  for (int j = k; j < 2 * k; ++j) inst.weights[j] = eps;
  for (int j = 0; j < k; ++j) inst.groups.push_back({j});
  for (int j = k; j < 2 * k; ++j) inst.groups.push_back({0, j});
  return inst;
}

}  // namespace wmax
