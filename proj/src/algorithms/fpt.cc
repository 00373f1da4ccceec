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

#include "wmax/algorithms/fpt.h"

#include <cmath>
#include <string>
#include <vector>

#include "wmax/core/errors.h"
#include "wmax/core/parallel.h"
#include "wmax/core/rng.h"

namespace wmax {
namespace {

struct RunOutcome {
  Subset set;
  double value = 0.0;
};

Subset SingleRun(const CountingOracle& oracle, int k, uint64_t seed) {
  const int d = oracle.ground_size();
  CounterRng rng(seed);
  Subset s = Subset::Empty(d);
  for (int step = 0; step < k; ++step) {
    const Subset rest = s.Complement();
    const double base = oracle.Value(s);
    std::vector<double> weights;
    weights.reserve(rest.size());
    double total = 0.0;
    bool any_positive = false;
    for (int j : rest) {
      const double gain = oracle.Value(s.With(j)) - base;
      if (gain > kFptZeroMarginal) any_positive = true;
      weights.push_back(gain > 0 ? gain : 0.0);
      total += weights.back();
    }
    int pick = 0;
    if (!any_positive) {
      pick = static_cast<int>(rng.UniformInt(rest.size()));
    } else {
      const double target = rng.Uniform01() * total;
      double acc = 0.0;
      pick = -1;
      for (int i = 0; i < rest.size(); ++i) {
        acc += weights[i];
        if (weights[i] > 0 && target < acc) {
          pick = i;
          break;
        }
      }
      if (pick < 0) {
        // Round-off left target at the very top: take the last positive one.
        for (int i = rest.size() - 1; i >= 0; --i) {
          if (weights[i] > 0) {
            pick = i;
            break;
          }
        }
      }
    }
    s = s.With(rest[pick]);
  }
  return s;
}

void CheckFptArgs(int k, int d, int64_t t) {
  if (k < 0 || k > d) throw DomainError("FptRandomized: need 0 <= k <= d");
  if (t < 1) throw DomainError("FptRandomized: need T >= 1");
}

AlgoResult Assemble(const CountingOracle& counting,
                    const std::vector<RunOutcome>& runs, uint64_t seed) {
  size_t best = 0;
  for (size_t r = 1; r < runs.size(); ++r) {
    if (runs[r].value > runs[best].value) best = r;
  }
  AlgoResult result;
  result.algorithm = "fpt";
  result.rng_seed = seed;
  result.solution = runs[best].set;
  result.value = runs[best].value;
  for (const RunOutcome& run : runs) {
    result.trajectory.push_back({run.set, run.value});
  }
  result.oracle_evals = counting.eval_count();
  return result;
}

}  // namespace

int64_t FptIterations(const FptParams& p) {
  if (!(p.gamma_k > 0 && p.gamma_k <= 1) || !(p.beta_kd > 0 && p.beta_kd <= 1)) {
    throw DomainError("FptIterations: ratios must lie in (0, 1]");
  }
  if (!(p.epsilon > 0)) throw DomainError("FptIterations: need epsilon > 0");
  if (!(p.delta > 0 && p.delta < 1)) {
    throw DomainError("FptIterations: need delta in (0, 1)");
  }
  if (!(p.f_tilde >= 0)) throw DomainError("FptIterations: need F~ >= 0");
  if (p.k < 0) throw DomainError("FptIterations: need k >= 0");
  const double base =
      (p.f_tilde + p.epsilon) / (p.epsilon * p.gamma_k * p.beta_kd);
  const double x = std::pow(base, p.k) * std::log(1.0 / p.delta);
  if (!(x < 4.0e18)) throw CapacityError("FptIterations: T overflows");
  const double t = std::ceil(x * (1.0 - 1e-12));
  return std::max<int64_t>(1, static_cast<int64_t>(t));
}

AlgoResult FptRandomized(const SetFunctionOracle& oracle, int k, int64_t t,
                         uint64_t seed, FptOptions options) {
  CheckFptArgs(k, oracle.ground_size(), t);
  CountingOracle counting(oracle, options.memoize);
  std::vector<RunOutcome> runs(t);
  ExceptionCollector errors;
#pragma omp parallel for schedule(dynamic)
  for (int64_t r = 0; r < t; ++r) {
    errors.Run([&] {
      runs[r].set = SingleRun(counting, k, seed + static_cast<uint64_t>(r));
      runs[r].value = counting.BookkeepingValue(runs[r].set);
    });
  }
  errors.Rethrow();
  return Assemble(counting, runs, seed);
}

namespace serial {

AlgoResult FptRandomized(const SetFunctionOracle& oracle, int k, int64_t t,
                         uint64_t seed, FptOptions options) {
  CheckFptArgs(k, oracle.ground_size(), t);
  CountingOracle counting(oracle, options.memoize);
  std::vector<RunOutcome> runs(t);
  for (int64_t r = 0; r < t; ++r) {
    runs[r].set = SingleRun(counting, k, seed + static_cast<uint64_t>(r));
    runs[r].value = counting.BookkeepingValue(runs[r].set);
  }
  return Assemble(counting, runs, seed);
}

}  // namespace serial
}  // namespace wmax
