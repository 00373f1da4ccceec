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

#ifndef WMAX_CORE_RNG_H_
#define WMAX_CORE_RNG_H_

#include <cstdint>
#include <limits>
#include <vector>

namespace wmax {

// Counter-based 64-bit generator ("wmax-splitmix64", stream version 1).
//
// The i-th output (i = 0, 1, ...) of stream `seed` is
//   Mix(seed + (i + 1) * 0x9e3779b97f4a7c15)
// with Mix the SplitMix64 finalizer. All derived variates below are computed
// with explicit formulas (no <random> distributions), so a seed produces the
// same numbers on every platform and standard library.
class CounterRng {
 public:
  using result_type = uint64_t;
  static constexpr int kStreamVersion = 1;

  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return NextU64(); }

  uint64_t NextU64();
  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();
  // Uniform on [lo, hi).
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Unbiased integer in [0, n); requires n > 0.
  uint64_t UniformInt(uint64_t n);
  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double Normal();

  // Uniformly random k-subset of [0, n), returned sorted.
  std::vector<int> SampleWithoutReplacement(int n, int k);

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace wmax

#endif  // WMAX_CORE_RNG_H_
