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

#include "wmax/ratios/ratios.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Kind { kSubmodular, kSupermodular };

// num/den for the requested ratio, or +inf when the pair carries no
// constraint (0/0 or x/0).
double PairRatio(Kind kind, double singles_sum, double joint_gain) {
  const double num = kind == Kind::kSubmodular ? singles_sum : joint_gain;
  const double den = kind == Kind::kSubmodular ? joint_gain : singles_sum;
  if (den < kRatioZeroTol) return kInf;
  return num / den;
}

void CheckRatioArgs(int d, int s) {
  if (d > kMaxRatioGroundSize) {
    throw CapacityError("ratio certification is capped at d <= " +
                        std::to_string(kMaxRatioGroundSize));
  }
  if (s < 1) throw DomainError("ratio certification needs s >= 1");
}

// Masks of all subsets of `u` in size-then-lex order.
std::vector<uint64_t> ContextsWithin(const Subset& u) {
  std::vector<uint64_t> out;
  SubsetEnumerator it(u.size(), u.size());
  Subset pos;
  while (it.Next(&pos)) {
    uint64_t mask = 0;
    for (int p : pos) mask |= uint64_t{1} << u[p];
    out.push_back(mask);
  }
  return out;
}

// Masks of all subsets of [d] with at most u elements, size-then-lex.
std::vector<uint64_t> ContextsUpTo(int d, int u) {
  std::vector<uint64_t> out;
  SubsetEnumerator it(d, std::clamp(u, 0, d));
  Subset l;
  while (it.Next(&l)) out.push_back(l.Mask());
  return out;
}

// Calls visit(batch_mask, ratio) for every batch S disjoint from `context`
// with 1 <= |S| <= s, in size-then-lex order; stops when visit returns false.
template <class Visit>
void SweepBatches(const SetFunctionTable& table, Kind kind, uint64_t context,
                  int s, Visit&& visit) {
  const int d = table.ground_size();
  const double base = table[context];
  std::vector<int> free;
  std::vector<double> single;
  for (int j = 0; j < d; ++j) {
    const uint64_t bit = uint64_t{1} << j;
    if (context & bit) continue;
    free.push_back(j);
    single.push_back(table[context | bit] - base);
  }
  const int n = static_cast<int>(free.size());
  std::vector<int> combo;
  for (int size = 1; size <= std::min(s, n); ++size) {
    combo.resize(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    do {
      uint64_t mask = 0;
      double sum = 0.0;
      for (int p : combo) {
        mask |= uint64_t{1} << free[p];
        sum += single[p];
      }
      const double ratio = PairRatio(kind, sum, table[context | mask] - base);
      if (!visit(mask, ratio)) return;
    } while (NextCombination(n, &combo));
  }
}

RatioValue MinimizeRatio(const SetFunctionTable& table, Kind kind,
                         const std::vector<uint64_t>& contexts, int s) {
  const int64_t count = static_cast<int64_t>(contexts.size());
  std::vector<double> local(count, kInf);
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < count; ++i) {
    double best = kInf;
    SweepBatches(table, kind, contexts[i], s, [&](uint64_t, double ratio) {
      best = std::min(best, ratio);
      return true;
    });
    local[i] = best;
  }
  const double global = *std::min_element(local.begin(), local.end());

  RatioValue out;
  if (global == kInf) return out;
  const double cutoff = global + kRatioZeroTol;
  const int d = table.ground_size();
  for (int64_t i = 0; i < count && !out.has_witness; ++i) {
    if (local[i] > cutoff) continue;
    SweepBatches(table, kind, contexts[i], s, [&](uint64_t mask, double ratio) {
      if (ratio > cutoff) return true;
      out.has_witness = true;
      out.context = Subset::FromMask(d, contexts[i]);
      out.batch = Subset::FromMask(d, mask);
      return false;
    });
  }
  out.value = kind == Kind::kSubmodular ? std::clamp(global, 0.0, 1.0)
                                        : global;
  return out;
}

// Curvature contributions of one (j, A) pair over all supersets C of A.
void CurvatureAt(const SetFunctionTable& table, int j, uint64_t a,
                 double* alpha, double* alpha_check) {
  const int d = table.ground_size();
  const uint64_t bit = uint64_t{1} << j;
  const uint64_t all = (uint64_t{1} << d) - 1;
  const uint64_t free = all & ~a & ~bit;
  const double gain_a = table[a | bit] - table[a];
  uint64_t extra = free;
  while (true) {
    const uint64_t c = a | extra;
    const double gain_c = table[c | bit] - table[c];
    if (gain_a >= kRatioZeroTol) {
      *alpha = std::max(*alpha, 1.0 - gain_c / gain_a);
    }
    if (gain_c >= kRatioZeroTol) {
      *alpha_check = std::max(*alpha_check, 1.0 - gain_a / gain_c);
    }
    if (extra == 0) break;
    extra = (extra - 1) & free;
  }
}

}  // namespace

std::string RatioReport::ToString() const {
  std::ostringstream out;
  out.precision(17);
  auto witness = [](const RatioValue& r) {
    return r.has_witness ? r.context.ToString() + " " + r.batch.ToString()
                         : std::string("none");
  };
  out << "universe = " << universe.ToString() << '\n'
      << "s = " << s << '\n'
      << "gamma = " << gamma.value << '\n'
      << "gamma_witness = " << witness(gamma) << '\n'
      << "beta = " << beta.value << '\n'
      << "beta_witness = " << witness(beta) << '\n';
  if (has_curvature) {
    out << "alpha = " << curvature.alpha << '\n'
        << "alpha_check = " << curvature.alpha_check << '\n';
  }
  return out.str();
}

RatioValue SubmodularityRatio(const SetFunctionTable& table, const Subset& u,
                              int s) {
  CheckRatioArgs(table.ground_size(), s);
  return MinimizeRatio(table, Kind::kSubmodular, ContextsWithin(u), s);
}

RatioValue SupermodularityRatio(const SetFunctionTable& table, const Subset& u,
                                int s) {
  CheckRatioArgs(table.ground_size(), s);
  return MinimizeRatio(table, Kind::kSupermodular, ContextsWithin(u), s);
}

RatioValue UniformSubmodularityRatio(const SetFunctionTable& table, int u,
                                     int s) {
  CheckRatioArgs(table.ground_size(), s);
  return MinimizeRatio(table, Kind::kSubmodular,
                       ContextsUpTo(table.ground_size(), u), s);
}

RatioValue UniformSupermodularityRatio(const SetFunctionTable& table, int u,
                                       int s) {
  CheckRatioArgs(table.ground_size(), s);
  return MinimizeRatio(table, Kind::kSupermodular,
                       ContextsUpTo(table.ground_size(), u), s);
}

CurvatureValues Curvature(const SetFunctionTable& table) {
  const int d = table.ground_size();
  if (d > kMaxCurvatureGroundSize) {
    throw CapacityError("curvature certification is capped at d <= " +
                        std::to_string(kMaxCurvatureGroundSize));
  }
  const int64_t masks = int64_t{1} << d;
  double alpha = 0.0;
  double alpha_check = 0.0;
#pragma omp parallel for schedule(dynamic, 16) \
    reduction(max : alpha, alpha_check)
  for (int64_t pair = 0; pair < d * masks; ++pair) {
    const int j = static_cast<int>(pair / masks);
    const uint64_t a = static_cast<uint64_t>(pair % masks);
    if (a & (uint64_t{1} << j)) continue;
    CurvatureAt(table, j, a, &alpha, &alpha_check);
  }
  return {std::min(alpha, 1.0), std::min(alpha_check, 1.0)};
}

RatioValue SubmodularityRatio(const SetFunctionOracle& oracle, const Subset& u,
                              int s) {
  CheckRatioArgs(oracle.ground_size(), s);
  return SubmodularityRatio(SetFunctionTable::Tabulate(oracle), u, s);
}

RatioValue SupermodularityRatio(const SetFunctionOracle& oracle,
                                const Subset& u, int s) {
  CheckRatioArgs(oracle.ground_size(), s);
  return SupermodularityRatio(SetFunctionTable::Tabulate(oracle), u, s);
}

CurvatureValues Curvature(const SetFunctionOracle& oracle) {
  if (oracle.ground_size() > kMaxCurvatureGroundSize) {
    throw CapacityError("curvature certification is capped at d <= " +
                        std::to_string(kMaxCurvatureGroundSize));
  }
  return Curvature(SetFunctionTable::Tabulate(oracle));
}

RatioReport CertifyRatios(const SetFunctionOracle& oracle, const Subset& u,
                          int s) {
  CheckRatioArgs(oracle.ground_size(), s);
  const SetFunctionTable table = SetFunctionTable::Tabulate(oracle);
  RatioReport report;
  report.universe = u;
  report.s = s;
  report.gamma = SubmodularityRatio(table, u, s);
  report.beta = SupermodularityRatio(table, u, s);
  if (table.ground_size() <= kMaxCurvatureGroundSize) {
    report.has_curvature = true;
    report.curvature = Curvature(table);
  }
  return report;
}

int CoverMultiplicity(const CoverageInstance& instance, int s) {
  if (s < 0) throw DomainError("CoverMultiplicity: s must be nonnegative");
  std::vector<int> degree(instance.universe_size, 0);
  for (const auto& group : instance.groups) {
    std::vector<int> members(group);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int v : members) {
      if (v < 0 || v >= instance.universe_size) {
        throw DomainError("CoverMultiplicity: element outside the universe");
      }
      ++degree[v];
    }
  }
  int best = 0;
  for (int deg : degree) best = std::max(best, std::min(s, deg));
  return best;
}

}  // namespace wmax
