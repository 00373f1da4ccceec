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

#include "wmax/bench/generators.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wmax/core/errors.h"
#include "wmax/core/rng.h"

namespace wmax {

Conditioning ParseConditioning(const std::string& name) {
  if (name == "well") return Conditioning::kWell;
  if (name == "ill") return Conditioning::kIll;
  throw DomainError("conditioning must be 'well' or 'ill', got '" + name + "'");
}

RegressionOptions ResolveRegressionDefaults(RegressionOptions o) {
  if (o.d < 1) throw DomainError("synthetic regression needs d >= 1");
  if (o.k <= 0) o.k = std::max(1, static_cast<int>(std::lround(0.1 * o.d)));
  if (o.k > o.d) throw DomainError("synthetic regression needs k <= d");
  if (o.n <= 0) {
    o.n = std::max(1, static_cast<int>(std::floor(10.0 * o.k * std::log(o.d))));
  }
  if (!(o.correlation > -1.0 / std::max(1, o.d - 1)) || !(o.correlation < 1)) {
    throw DomainError("equicorrelation outside the positive-definite range");
  }
  return o;
}

SyntheticData GenerateSyntheticRegression(const RegressionOptions& options,
                                          uint64_t seed) {
  const RegressionOptions o = ResolveRegressionDefaults(options);
  CounterRng rng(seed);
  SyntheticData data;
  data.design.resize(o.n, o.d);
  for (int i = 0; i < o.n; ++i) {
    for (int j = 0; j < o.d; ++j) data.design(i, j) = rng.Normal();
  }
  if (o.conditioning == Conditioning::kIll) {
    Eigen::MatrixXd sigma =
        Eigen::MatrixXd::Constant(o.d, o.d, o.correlation);
    sigma.diagonal().setOnes();
    const Eigen::MatrixXd chol = Eigen::LLT<Eigen::MatrixXd>(sigma).matrixL();
    data.design = data.design * chol.transpose();
  }
  data.x_true = Eigen::VectorXd::Zero(o.d);
  data.x_true.head(o.k).setOnes();
  std::vector<int> support(o.k);
  for (int j = 0; j < o.k; ++j) support[j] = j;
  data.true_support = Subset(o.d, support);
  data.response = data.design * data.x_true;
  for (int i = 0; i < o.n; ++i) data.response(i) += o.noise * rng.Normal();
  return data;
}

SyntheticData GenerateSyntheticClassification(const RegressionOptions& options,
                                              uint64_t seed) {
  SyntheticData data = GenerateSyntheticRegression(options, seed);
  for (Eigen::Index i = 0; i < data.response.size(); ++i) {
    data.response(i) = data.response(i) >= 0 ? 1.0 : -1.0;
  }
  return data;
}

QuadraticLossInstance ToQuadraticInstance(const SyntheticData& data) {
  return {data.design, data.response};
}

LogisticLossInstance ToLogisticInstance(const SyntheticData& data,
                                        double ridge) {
  return {data.design, data.response, ridge};
}

LpInstance GenerateLpInstance(int d, int m, int k, uint64_t seed) {
  if (d < 1 || m < 1 || k < 0) throw DomainError("LP generator: bad sizes");
  CounterRng rng(seed);
  LpInstance lp;
  lp.profit.resize(d);
  for (int j = 0; j < d; ++j) lp.profit(j) = rng.Uniform01();
  lp.constraints.resize(m, d);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) lp.constraints(i, j) = rng.Uniform01();
  }
  lp.capacity = Eigen::VectorXd::Constant(m, 0.5 * k);
  return lp;
}

CoverageInstance GenerateCoverageInstance(int d, int universe, double density,
                                          uint64_t seed) {
  if (d < 1 || universe < 1) throw DomainError("coverage generator: bad sizes");
  if (!(density > 0 && density <= 1)) {
    throw DomainError("coverage generator: density must lie in (0, 1]");
  }
  CounterRng rng(seed);
  CoverageInstance inst;
  inst.universe_size = universe;
  for (int v = 0; v < universe; ++v) inst.weights.push_back(rng.Uniform01());
  for (int j = 0; j < d; ++j) {
    std::vector<int> group;
    for (int v = 0; v < universe; ++v) {
      if (rng.Uniform01() < density) group.push_back(v);
    }
    if (group.empty()) group.push_back(static_cast<int>(rng.UniformInt(universe)));
    inst.groups.push_back(std::move(group));
  }
  return inst;
}

HardnessInstance GenerateHardnessInstance(int k, int r, int d, uint64_t seed) {
  if (k < 1 || d < 2 * k) throw DomainError("hardness generator: need d >= 2k");
  if (r < 1 || r > k) throw DomainError("hardness generator: need 1 <= r <= k");
  CounterRng rng(seed);
  return {k, r, Subset(d, rng.SampleWithoutReplacement(d, k))};
}

}  // namespace wmax
