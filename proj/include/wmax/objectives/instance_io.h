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

#ifndef WMAX_OBJECTIVES_INSTANCE_IO_H_
#define WMAX_OBJECTIVES_INSTANCE_IO_H_

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>

#include "wmax/core/oracle.h"
#include "wmax/objectives/coverage.h"
#include "wmax/objectives/hardness.h"
#include "wmax/objectives/logistic_loss.h"
#include "wmax/objectives/lp_objective.h"
#include "wmax/objectives/modular.h"
#include "wmax/objectives/quadratic_loss.h"
#include "wmax/objectives/smooth_loss.h"

namespace wmax {

using Instance =
    std::variant<QuadraticLossInstance, LogisticLossInstance, LpInstance,
                 CoverageInstance, HardnessInstance, ModularInstance>;

// Family keyword written in the header line ("quadratic", "lp", ...).
std::string InstanceKind(const Instance& instance);

// Plain-text instance format. Blank lines and text after '#' are ignored.
// The first line names the family and its dimensions; numbers are written
// with 17 significant digits so values round-trip exactly.
//
//   quadratic <n> <d>        then n rows:  a_i1 ... a_id  y_i
//   logistic <n> <d> <lam>   then n rows:  a_i1 ... a_id  y_i  (y_i = +-1)
//   lp <m> <d>               then one row c_1 ... c_d,
//                            then m rows:  a_i1 ... a_id  b_i
//   coverage <U> <d>         then one row w_1 ... w_U,
//                            then d rows:  |I_j|  v_1 ... v_|I_j|
//   hardness <k> <r> <d>     then one row: the k hidden indices
//   modular <d>              then one row w_1 ... w_d
void WriteInstance(const Instance& instance, std::ostream& out);
// Throws ParseError with the 1-based line and token column on bad input.
Instance ReadInstance(std::istream& in);

void SaveInstance(const Instance& instance, const std::string& path);
Instance LoadInstance(const std::string& path);

// An instance bound to its set-function oracle. For the loss families the
// SmoothLoss is kept alive alongside the LossReductionOracle built on it.
struct BoundObjective {
  std::shared_ptr<const SmoothLoss> loss;  // null for combinatorial families
  std::shared_ptr<const SetFunctionOracle> oracle;
};

BoundObjective BindObjective(const Instance& instance);

}  // namespace wmax

#endif  // WMAX_OBJECTIVES_INSTANCE_IO_H_
