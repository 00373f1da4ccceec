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

#include "wmax/guarantees/bounds.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

BoundReport Make(std::string id, std::string inputs, double raw) {
  BoundReport report;
  report.formula_id = std::move(id);
  report.inputs = std::move(inputs);
  report.raw = raw;
  report.ratio = std::clamp(raw, 0.0, 1.0);
  report.clamped = report.ratio != raw;
  return report;
}

void CheckHardnessArgs(int k, int r) {
  if (k < 1 || r < 1 || r > k) throw DomainError("need 1 <= r <= k");
}

std::string KR(int k, int r) {
  return "k=" + std::to_string(k) + ",r=" + std::to_string(r);
}

}  // namespace

std::string BoundReport::ToString() const {
  std::ostringstream out;
  out.precision(17);
  out << "formula = " << formula_id << '\n'
      << "inputs = " << inputs << '\n'
      << "ratio = " << ratio << '\n';
  if (clamped) out << "raw = " << raw << "\nclamped = true\n";
  return out.str();
}

MultiGreedyBounds MultiGreedyBound(std::span<const double> gammas,
                                   std::span<const double> betas,
                                   std::span<const int> batches, int k_star) {
  if (gammas.size() != batches.size() || betas.size() != batches.size()) {
    throw DomainError("MultiGreedyBound: one gamma and beta per round");
  }
  if (k_star < 1) throw DomainError("MultiGreedyBound: need k* >= 1");
  double product = 1.0;
  double exponent = 0.0;
  std::ostringstream inputs;
  inputs.precision(17);
  inputs << "k*=" << k_star;
  for (size_t i = 0; i < batches.size(); ++i) {
    const double g = gammas[i];
    const double b = betas[i];
    if (!(g >= 0 && g <= 1) || !(b >= 0 && b <= 1)) {
      throw DomainError("MultiGreedyBound: ratios must lie in [0, 1]");
    }
    if (batches[i] < 1 || batches[i] > k_star) {
      throw DomainError("MultiGreedyBound: need 1 <= b_i <= k*");
    }
    const double step = g * b * batches[i] / k_star;
    product *= 1.0 - step;
    exponent += step;
    inputs << ";b" << i + 1 << '=' << batches[i] << ",gamma=" << g
           << ",beta=" << b;
  }
  return {Make("mgreedy-product", inputs.str(), 1.0 - product),
          Make("mgreedy-exp", inputs.str(), 1.0 - std::exp(-exponent))};
}

BoundReport MompBound(double mu, double nu, int k, int k_star) {
  if (!(mu > 0)) throw DomainError("MompBound: mu must be positive");
  if (!(nu >= mu)) throw DomainError("MompBound: need mu <= nu");
  if (k < 1 || k_star < 1) throw DomainError("MompBound: need k, k* >= 1");
  std::ostringstream inputs;
  inputs.precision(17);
  inputs << "mu=" << mu << ",nu=" << nu << ",k=" << k << ",k*=" << k_star;
  return Make("momp", inputs.str(),
              1.0 - std::exp(-(mu / nu) * k / static_cast<double>(k_star)));
}

BoundReport HardnessAlpha(int k, int r) {
  CheckHardnessArgs(k, r);
  const double ell = k - r + 1;
  const double raw = 1.0 - (ell / k) * std::pow((k - r) / ell, ell);
  return Make("hardness-alpha", KR(k, r), raw);
}

BoundReport HardnessSprBound(int k, int r) {
  CheckHardnessArgs(k, r);
  const double ell = k - r + 1;
  return Make("hardness-spr", KR(k, r), 1.0 / (2.0 + (r - 1) / ell));
}

BoundReport FptSuccessBound(double q, int64_t t) {
  if (!(q > 0 && q <= 1)) throw DomainError("FptSuccessBound: need q in (0, 1]");
  if (t < 1) throw DomainError("FptSuccessBound: need T >= 1");
  std::ostringstream inputs;
  inputs.precision(17);
  inputs << "q=" << q << ",T=" << t;
  // 1 - (1-q)^T.
  const double raw =
      q == 1.0 ? 1.0 : -std::expm1(static_cast<double>(t) * std::log1p(-q));
  return Make("fpt", inputs.str(), raw);
}

double FptSingleRunProbability(double gamma_k, double beta_kd, double f_tilde,
                               double epsilon, int k) {
  if (!(gamma_k > 0 && gamma_k <= 1) || !(beta_kd > 0 && beta_kd <= 1)) {
    throw DomainError("FptSingleRunProbability: ratios must lie in (0, 1]");
  }
  if (!(epsilon > 0) || !(f_tilde >= 0) || k < 0) {
    throw DomainError("FptSingleRunProbability: bad arguments");
  }
  return std::pow(gamma_k * beta_kd * epsilon / (f_tilde + epsilon), k);
}

}  // namespace wmax
