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

#include "wmax/ratios/set_function_table.h"

#include <string>

#include "wmax/core/errors.h"
#include "wmax/core/parallel.h"

namespace wmax {
namespace {

void CheckTableSize(int d) {
  if (d > kMaxTableGroundSize) {
    throw CapacityError("tabulation over 2^" + std::to_string(d) +
                        " subsets exceeds the cap d <= " +
                        std::to_string(kMaxTableGroundSize));
  }
}

}  // namespace

SetFunctionTable::SetFunctionTable(int ground_size, std::vector<double> values)
    : ground_size_(ground_size), values_(std::move(values)) {
  CheckTableSize(ground_size);
  if (values_.size() != (uint64_t{1} << ground_size)) {
    throw DomainError("SetFunctionTable: expected 2^d values");
  }
}

SetFunctionTable SetFunctionTable::Tabulate(const SetFunctionOracle& oracle) {
  const int d = oracle.ground_size();
  CheckTableSize(d);
  const int64_t count = int64_t{1} << d;
  std::vector<double> values(count);
  ExceptionCollector errors;
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t mask = 0; mask < count; ++mask) {
    errors.Run([&] { values[mask] = oracle.Value(Subset::FromMask(d, mask)); });
  }
  errors.Rethrow();
  return SetFunctionTable(d, std::move(values));
}

namespace serial {

SetFunctionTable Tabulate(const SetFunctionOracle& oracle) {
  const int d = oracle.ground_size();
  CheckTableSize(d);
  std::vector<double> values;
  values.reserve(uint64_t{1} << d);
  for (uint64_t mask = 0; mask < (uint64_t{1} << d); ++mask) {
    values.push_back(oracle.Value(Subset::FromMask(d, mask)));
  }
  return SetFunctionTable(d, std::move(values));
}

}  // namespace serial
}  // namespace wmax
