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

#ifndef WMAX_RATIOS_RATIOS_H_
#define WMAX_RATIOS_RATIOS_H_

#include <string>

#include "wmax/core/oracle.h"
#include "wmax/core/subset.h"
#include "wmax/objectives/coverage.h"
#include "wmax/ratios/set_function_table.h"

namespace wmax {

inline constexpr int kMaxRatioGroundSize = 14;
inline constexpr int kMaxCurvatureGroundSize = 12;
// Quantities below this magnitude count as zero in the ratio sweeps.
inline constexpr double kRatioZeroTol = 1e-12;

// Exact ratio with the first minimizing pair (L, S) in size-then-lex order of
// L, then of S. When no pair is informative (every pair is 0/0 or x/0) the
// value is 1 and has_witness is false.
struct RatioValue {
  double value = 1.0;
  bool has_witness = false;
  Subset context;  // L
  Subset batch;    // S
};

struct CurvatureValues {
  double alpha = 0.0;        // curvature
  double alpha_check = 0.0;  // inverse curvature
};

struct RatioReport {
  Subset universe;
  int s = 0;
  RatioValue gamma;
  RatioValue beta;
  bool has_curvature = false;
  CurvatureValues curvature;

  // Flat "key = value" lines.
  std::string ToString() const;
};

// gamma_{U,s}: min over L in U and S disjoint from L with 1 <= |S| <= s of
// sum_j Delta(j|L) / Delta(S|L), clipped to [0, 1].
RatioValue SubmodularityRatio(const SetFunctionTable& table, const Subset& u,
                              int s);
// beta_{U,s}: min of Delta(S|L) / sum_j Delta(j|L) over the same pairs.
RatioValue SupermodularityRatio(const SetFunctionTable& table, const Subset& u,
                                int s);
// gamma_{u,s} and beta_{u,s}: the same minima over all L with |L| <= u.
RatioValue UniformSubmodularityRatio(const SetFunctionTable& table, int u,
                                     int s);
RatioValue UniformSupermodularityRatio(const SetFunctionTable& table, int u,
                                       int s);
// Smallest alpha, alpha_check in [0, 1] with
//   Delta(j|C) >= (1 - alpha) Delta(j|A),  Delta(j|A) >= (1 - alpha_check)
//   Delta(j|C)  for all j and A in C in [d] \ {j}.
CurvatureValues Curvature(const SetFunctionTable& table);

// Oracle entry points: tabulate, then sweep. Throw CapacityError for
// d > kMaxRatioGroundSize (kMaxCurvatureGroundSize for Curvature).
RatioValue SubmodularityRatio(const SetFunctionOracle& oracle, const Subset& u,
                              int s);
RatioValue SupermodularityRatio(const SetFunctionOracle& oracle,
                                const Subset& u, int s);
CurvatureValues Curvature(const SetFunctionOracle& oracle);

// gamma, beta over (U, s), plus curvature when d <= kMaxCurvatureGroundSize.
RatioReport CertifyRatios(const SetFunctionOracle& oracle, const Subset& u,
                          int s);

// c_s = max over elements v and |S| <= s of |{j in S : v in I_j}|, which is
// max_v min(s, number of groups containing v).
int CoverMultiplicity(const CoverageInstance& instance, int s);

namespace serial {

// Single-threaded references for the table sweeps above.
RatioValue SubmodularityRatio(const SetFunctionTable& table, const Subset& u,
                              int s);
RatioValue SupermodularityRatio(const SetFunctionTable& table, const Subset& u,
                                int s);
RatioValue UniformSubmodularityRatio(const SetFunctionTable& table, int u,
                                     int s);
RatioValue UniformSupermodularityRatio(const SetFunctionTable& table, int u,
                                       int s);
CurvatureValues Curvature(const SetFunctionTable& table);

}  // namespace serial
}  // namespace wmax

#endif  // WMAX_RATIOS_RATIOS_H_
