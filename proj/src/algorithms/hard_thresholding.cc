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

#include "wmax/algorithms/hard_thresholding.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "wmax/core/errors.h"

namespace wmax {
namespace {

void CheckArgs(const SmoothLoss& loss, int k, const ThresholdingOptions& o) {
  if (k < 1 || k > loss.dim()) throw DomainError("need 1 <= k <= d");
  if (!(o.tol >= 0)) throw DomainError("tolerance must be nonnegative");
  if (o.max_iter < 1) throw DomainError("max_iter must be positive");
}

double StepSize(const SmoothLoss& loss, const ThresholdingOptions& o) {
  if (o.step > 0) return o.step;
  const double lipschitz = loss.SmoothnessConstant();
  return lipschitz > 0 ? 1.0 / lipschitz : 1.0;
}

Eigen::VectorXd Restrict(const Eigen::VectorXd& v, const Subset& s) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (int j : s) out(j) = v(j);
  return out;
}

// Tracks consecutive increases and throws once the limit is reached.
class DivergenceGuard {
 public:
  DivergenceGuard(int limit, const char* name) : limit_(limit), name_(name) {}
  void Observe(double decrease, int iteration) {
    count_ = decrease < 0 ? count_ + 1 : 0;
    if (count_ >= limit_) {
      throw DivergenceError(std::string(name_) + ": loss increased for " +
                            std::to_string(count_) +
                            " consecutive iterations (iteration " +
                            std::to_string(iteration) + ")");
    }
  }

 private:
  int limit_;
  const char* name_;
  int count_ = 0;
};

void Finish(const SmoothLoss& loss, const Subset& support, double loss0,
            ThresholdingResult* out) {
  out->result.solution = support;
  out->result.value = loss0 - loss.Loss(out->x);
}

}  // namespace

Subset TopKSupport(const Eigen::VectorXd& v, int k) {
  const int d = static_cast<int>(v.size());
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(v(a)) > std::abs(v(b));
  });
  order.resize(k);
  return Subset(d, order);
}

ThresholdingResult Iht(const SmoothLoss& loss, int k,
                       ThresholdingOptions options) {
  CheckArgs(loss, k, options);
  const double eta = StepSize(loss, options);
  const double loss0 = loss.LossAtZero();
  ThresholdingResult out;
  out.result.algorithm = "iht";
  out.x = Eigen::VectorXd::Zero(loss.dim());
  Subset support = Subset::Empty(loss.dim());
  double current = loss0;
  DivergenceGuard guard(options.max_increases, "IHT");
  for (int it = 1; it <= options.max_iter; ++it) {
    const Eigen::VectorXd z = out.x - eta * loss.Gradient(out.x);
    ++out.result.oracle_evals;
    support = TopKSupport(z, k);
    out.x = Restrict(z, support);
    const double next = loss.Loss(out.x);
    const double decrease = current - next;
    current = next;
    out.iterations = it;
    out.result.trajectory.push_back({support, loss0 - next});
    guard.Observe(decrease, it);
    if (decrease >= 0 && decrease < options.tol) break;
  }
  Finish(loss, support, loss0, &out);
  return out;
}

ThresholdingResult Htp(const SmoothLoss& loss, int k,
                       ThresholdingOptions options) {
  CheckArgs(loss, k, options);
  const double eta = StepSize(loss, options);
  const double loss0 = loss.LossAtZero();
  ThresholdingResult out;
  out.result.algorithm = "htp";
  out.x = Eigen::VectorXd::Zero(loss.dim());
  Subset support = Subset::Empty(loss.dim());
  std::set<Subset> seen;
  double current = loss0;
  DivergenceGuard guard(options.max_increases, "HTP");
  for (int it = 1; it <= options.max_iter; ++it) {
    const Subset next_support =
        TopKSupport(out.x - eta * loss.Gradient(out.x), k);
    out.iterations = it;
    if (!seen.insert(next_support).second) break;
    support = next_support;
    out.x = loss.RestrictedArgmin(support);
    ++out.result.oracle_evals;
    const double next = loss.Loss(out.x);
    const double decrease = current - next;
    current = next;
    out.result.trajectory.push_back({support, loss0 - next});
    guard.Observe(decrease, it);
    if (decrease >= 0 && decrease < options.tol) break;
  }
  Finish(loss, support, loss0, &out);
  return out;
}

}  // namespace wmax
