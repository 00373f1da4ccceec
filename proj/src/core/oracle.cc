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

#include "wmax/core/oracle.h"

#include <string>

#include "wmax/core/errors.h"

namespace wmax {

void SetFunctionOracle::CheckGroundSize(const Subset& s) const {
  if (s.ground_size() != ground_size()) {
    throw DomainError("oracle over d = " + std::to_string(ground_size()) +
                      " queried with a subset of [" +
                      std::to_string(s.ground_size()) + "]");
  }
}

double MarginalGain(const SetFunctionOracle& oracle, const Subset& t,
                    const Subset& s) {
  if (t.ground_size() != oracle.ground_size() ||
      s.ground_size() != oracle.ground_size()) {
    throw DomainError("MarginalGain: subset ground size does not match oracle");
  }
  if (t.IsSubsetOf(s)) return 0.0;
  return oracle.Value(s.Union(t)) - oracle.Value(s);
}

double MarginalGain(const SetFunctionOracle& oracle, int j, const Subset& s,
                    double value_of_s) {
  if (s.Contains(j)) return 0.0;
  return oracle.Value(s.With(j)) - value_of_s;
}

double CountingOracle::Value(const Subset& s) const {
  return Evaluate(s, &eval_count_);
}

double CountingOracle::BookkeepingValue(const Subset& s) const {
  return Evaluate(s, &bookkeeping_count_);
}

double CountingOracle::Evaluate(const Subset& s,
                                std::atomic<int64_t>* counter) const {
  if (!memoize_) {
    counter->fetch_add(1);
    return inner_.Value(s);
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(s);
    if (it != memo_.end()) return it->second;
  }
  const double v = inner_.Value(s);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (memo_.try_emplace(s, v).second) counter->fetch_add(1);
  return v;
}

void CountingOracle::ResetCounts() {
  eval_count_.store(0);
  bookkeeping_count_.store(0);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.clear();
}

}  // namespace wmax
