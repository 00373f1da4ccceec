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

#ifndef WMAX_RATIOS_SET_FUNCTION_TABLE_H_
#define WMAX_RATIOS_SET_FUNCTION_TABLE_H_

#include <cstdint>
#include <vector>

#include "wmax/core/oracle.h"

namespace wmax {

// Ground sets above this size are refused by the tabulating certifiers.
inline constexpr int kMaxTableGroundSize = 20;

// F evaluated on all 2^d subsets, indexed by bit mask.
class SetFunctionTable {
 public:
  // Evaluates the oracle on every subset, splitting the masks across OpenMP
  // threads. Throws CapacityError when d > kMaxTableGroundSize.
  static SetFunctionTable Tabulate(const SetFunctionOracle& oracle);

  SetFunctionTable(int ground_size, std::vector<double> values);

  int ground_size() const { return ground_size_; }
  double operator[](uint64_t mask) const { return values_[mask]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int ground_size_;
  std::vector<double> values_;
};

namespace serial {

// Single-threaded reference for SetFunctionTable::Tabulate.
SetFunctionTable Tabulate(const SetFunctionOracle& oracle);

}  // namespace serial
}  // namespace wmax

#endif  // WMAX_RATIOS_SET_FUNCTION_TABLE_H_
