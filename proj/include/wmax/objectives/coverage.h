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

#ifndef WMAX_OBJECTIVES_COVERAGE_H_
#define WMAX_OBJECTIVES_COVERAGE_H_

#include <vector>

#include "wmax/core/oracle.h"

namespace wmax {

// Weighted coverage over a universe V = {0, ..., universe_size - 1}; group j
// is the element list I_j.
struct CoverageInstance {
  int universe_size = 0;
  std::vector<double> weights;         // w_v >= 0, one per element
  std::vector<std::vector<int>> groups;  // I_0, ..., I_{d-1}

  int dim() const { return static_cast<int>(groups.size()); }
};

// F(S) = sum of w_v over v in the union of I_j, j in S.
class CoverageOracle : public SetFunctionOracle {
 public:
  // Throws DomainError on negative weights or out-of-range elements.
  // Duplicate elements inside a group are collapsed.
  explicit CoverageOracle(CoverageInstance instance);

  int ground_size() const override { return instance_.dim(); }
  double Value(const Subset& s) const override;

  const CoverageInstance& instance() const { return instance_; }

 private:
  CoverageInstance instance_;
};

double CoverageValue(const CoverageInstance& instance, const Subset& s);

// Three unit-weight elements covered by I_0 = {0,1}, I_1 = {1,2},
// I_2 = {0,2}. Submodular with curvature 1.
CoverageInstance TriangleCoverage();

// Instance with d = 2k on which the oblivious top-k rule attains only
// (1 + k eps) / (k + eps) of the optimum: groups 0..k-1 are the unit-weight
// singletons {v_j}; groups k..2k-1 are {v_0, v_j} with w_{v_j} = eps.
CoverageInstance SingleStageGapCoverage(int k, double eps);

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_COVERAGE_H_
