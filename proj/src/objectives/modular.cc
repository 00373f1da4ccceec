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

#include "wmax/objectives/modular.h"

#include "wmax/core/errors.h"

namespace wmax {

ModularOracle::ModularOracle(ModularInstance instance)
    : instance_(std::move(instance)) {
  for (double w : instance_.weights) {
    if (!(w >= 0)) throw DomainError("ModularOracle: weights must be >= 0");
  }
}

double ModularOracle::Value(const Subset& s) const {
  CheckGroundSize(s);
  double total = 0.0;
  for (int j : s) total += instance_.weights[j];
  return total;
}

}  // namespace wmax
