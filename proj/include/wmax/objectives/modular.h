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

#ifndef WMAX_OBJECTIVES_MODULAR_H_
#define WMAX_OBJECTIVES_MODULAR_H_

#include <vector>

#include "wmax/core/oracle.h"

namespace wmax {

struct ModularInstance {
  std::vector<double> weights;

  int dim() const { return static_cast<int>(weights.size()); }
};

// F(S) = sum of w_j over j in S, with w_j >= 0.
class ModularOracle : public SetFunctionOracle {
 public:
  explicit ModularOracle(ModularInstance instance);

  int ground_size() const override { return instance_.dim(); }
  double Value(const Subset& s) const override;

  const ModularInstance& instance() const { return instance_; }

 private:
  ModularInstance instance_;
};

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_MODULAR_H_
