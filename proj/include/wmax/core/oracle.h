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

#ifndef WMAX_CORE_ORACLE_H_
#define WMAX_CORE_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "wmax/core/subset.h"

namespace wmax {

// Evaluation contract for a set function F: 2^[d] -> R>=0. Implementations
// are expected to be normalized (F(empty) = 0) and monotone, and must be safe
// to call concurrently: instances are immutable after construction.
class SetFunctionOracle {
 public:
  virtual ~SetFunctionOracle() = default;

  virtual int ground_size() const = 0;
  virtual double Value(const Subset& s) const = 0;

 protected:
  // Throws DomainError if `s` is over a different ground set.
  void CheckGroundSize(const Subset& s) const;
};

// F(S u T) - F(S).
double MarginalGain(const SetFunctionOracle& oracle, const Subset& t,
                    const Subset& s);
// F(S u {j}) - F(S), reusing a known F(S).
double MarginalGain(const SetFunctionOracle& oracle, int j, const Subset& s,
                    double value_of_s);

// Transparent wrapper that counts evaluations of `inner`.
//
// Value() goes to the algorithmic channel counted by eval_count().
// BookkeepingValue() goes to a separate tagged channel (trajectory checkpoints
// and final re-verification) and is not counted by eval_count().
//
// With memoization, each distinct subset reaches `inner` once and later
// queries are served from the memo without incrementing any counter.
class CountingOracle : public SetFunctionOracle {
 public:
  explicit CountingOracle(const SetFunctionOracle& inner,
                          bool memoize = false)
      : inner_(inner), memoize_(memoize) {}

  CountingOracle(const CountingOracle&) = delete;
  CountingOracle& operator=(const CountingOracle&) = delete;

  int ground_size() const override { return inner_.ground_size(); }
  double Value(const Subset& s) const override;
  double BookkeepingValue(const Subset& s) const;

  int64_t eval_count() const { return eval_count_.load(); }
  int64_t bookkeeping_count() const { return bookkeeping_count_.load(); }
  bool memoized() const { return memoize_; }
  void ResetCounts();

  const SetFunctionOracle& inner() const { return inner_; }

 private:
  double Evaluate(const Subset& s, std::atomic<int64_t>* counter) const;

  const SetFunctionOracle& inner_;
  const bool memoize_;
  mutable std::atomic<int64_t> eval_count_{0};
  mutable std::atomic<int64_t> bookkeeping_count_{0};
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Subset, double, SubsetHash> memo_;
};

}  // namespace wmax

#endif  // WMAX_CORE_ORACLE_H_
