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

#include <algorithm>
#include <limits>
#include <vector>

#include "wmax/core/errors.h"
#include "wmax/ratios/ratios.h"

namespace wmax {
namespace serial {
namespace {

struct Pair {
  Subset context;
  Subset batch;
  double ratio;
};

double Value(const SetFunctionTable& table, const Subset& s) {
  return table[s.Mask()];
}

// Every informative (L, S) pair in size-then-lex order of L, then S.
std::vector<Pair> InformativePairs(const SetFunctionTable& table,
                                   const std::vector<Subset>& contexts, int s,
                                   bool submodular) {
  const int d = table.ground_size();
  std::vector<Pair> pairs;
  for (const Subset& l : contexts) {
    const Subset free = l.Complement();
    const double base = Value(table, l);
    for (const Subset& pos : EnumerateSubsets(free.size(),
                                              std::min(s, free.size()))) {
      if (pos.empty()) continue;
      std::vector<int> picked;
      for (int p : pos) picked.push_back(free[p]);
      const Subset batch(d, picked);
      double sum = 0.0;
      for (int j : batch) sum += Value(table, l.With(j)) - base;
      const double joint = Value(table, l.Union(batch)) - base;
      const double num = submodular ? sum : joint;
      const double den = submodular ? joint : sum;
      if (den < kRatioZeroTol) continue;
      pairs.push_back({l, batch, num / den});
    }
  }
  return pairs;
}

RatioValue Minimize(const std::vector<Pair>& pairs, bool submodular) {
  RatioValue out;
  if (pairs.empty()) return out;
  double best = std::numeric_limits<double>::infinity();
  for (const Pair& p : pairs) best = std::min(best, p.ratio);
  for (const Pair& p : pairs) {
    if (p.ratio <= best + kRatioZeroTol) {
      out.has_witness = true;
      out.context = p.context;
      out.batch = p.batch;
      break;
    }
  }
  out.value = submodular ? std::clamp(best, 0.0, 1.0) : best;
  return out;
}

std::vector<Subset> SubsetsOf(const Subset& u) {
  std::vector<Subset> out;
  for (const Subset& pos : EnumerateSubsets(u.size(), u.size())) {
    std::vector<int> picked;
    for (int p : pos) picked.push_back(u[p]);
    out.emplace_back(u.ground_size(), picked);
  }
  return out;
}

void CheckArgs(int d, int s) {
  if (d > kMaxRatioGroundSize) throw CapacityError("ratio cap exceeded");
  if (s < 1) throw DomainError("ratio certification needs s >= 1");
}

}  // namespace

RatioValue SubmodularityRatio(const SetFunctionTable& table, const Subset& u,
                              int s) {
  CheckArgs(table.ground_size(), s);
  return Minimize(InformativePairs(table, SubsetsOf(u), s, true), true);
}

RatioValue SupermodularityRatio(const SetFunctionTable& table, const Subset& u,
                                int s) {
  CheckArgs(table.ground_size(), s);
  return Minimize(InformativePairs(table, SubsetsOf(u), s, false), false);
}

RatioValue UniformSubmodularityRatio(const SetFunctionTable& table, int u,
                                     int s) {
  CheckArgs(table.ground_size(), s);
  const int d = table.ground_size();
  return Minimize(
      InformativePairs(table, EnumerateSubsets(d, std::clamp(u, 0, d)), s,
                       true),
      true);
}

RatioValue UniformSupermodularityRatio(const SetFunctionTable& table, int u,
                                       int s) {
  CheckArgs(table.ground_size(), s);
  const int d = table.ground_size();
  return Minimize(
      InformativePairs(table, EnumerateSubsets(d, std::clamp(u, 0, d)), s,
                       false),
      false);
}

CurvatureValues Curvature(const SetFunctionTable& table) {
  const int d = table.ground_size();
  if (d > kMaxCurvatureGroundSize) throw CapacityError("curvature cap exceeded");
  CurvatureValues out;
  const std::vector<Subset> all = EnumerateSubsets(d, d);
  for (int j = 0; j < d; ++j) {
    for (const Subset& a : all) {
      if (a.Contains(j)) continue;
      const double gain_a = Value(table, a.With(j)) - Value(table, a);
      for (const Subset& c : all) {
        if (c.Contains(j) || !a.IsSubsetOf(c)) continue;
        const double gain_c = Value(table, c.With(j)) - Value(table, c);
        if (gain_a >= kRatioZeroTol) {
          out.alpha = std::max(out.alpha, 1.0 - gain_c / gain_a);
        }
        if (gain_c >= kRatioZeroTol) {
          out.alpha_check = std::max(out.alpha_check, 1.0 - gain_a / gain_c);
        }
      }
    }
  }
  out.alpha = std::min(out.alpha, 1.0);
  out.alpha_check = std::min(out.alpha_check, 1.0);
  return out;
}

}  // namespace serial
}  // namespace wmax
