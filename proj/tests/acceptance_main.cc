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

// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "test_util.h"
#include "wmax/algorithms/exhaustive.h"
#include "wmax/algorithms/fpt.h"
#include "wmax/algorithms/greedy.h"
#include "wmax/algorithms/hard_thresholding.h"
#include "wmax/algorithms/multi_stage.h"
#include "wmax/algorithms/selection.h"
#include "wmax/bench/generators.h"
#include "wmax/core/subset.h"
#include "wmax/guarantees/bounds.h"
#include "wmax/objectives/coverage.h"
#include "wmax/objectives/hardness.h"
#include "wmax/objectives/lp_objective.h"
#include "wmax/objectives/modular.h"
#include "wmax/objectives/quadratic_loss.h"
#include "wmax/ratios/hardness_check.h"
#include "wmax/ratios/ratios.h"
#include "wmax/ratios/set_function_table.h"
#include "wmax/ratios/spectral.h"

namespace wmax {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

std::vector<int> StageChoices(int k) {
  std::vector<int> ms = {1, 2, k};
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  ms.erase(std::remove_if(ms.begin(), ms.end(), [k](int m) { return m > k; }),
           ms.end());
  return ms;
}

Outcome CoverageTriangle() {
  const CoverageOracle f(TriangleCoverage());
  const SetFunctionTable t = SetFunctionTable::Tabulate(f);
  const double beta = UniformSupermodularityRatio(t, 3, 3).value;
  const double gamma = UniformSubmodularityRatio(t, 3, 3).value;
  const CurvatureValues c = Curvature(t);
  const bool ok = std::abs(beta - 0.5) <= 1e-9 && std::abs(gamma - 1) <= 1e-9 &&
                  c.alpha == 1.0 && std::isfinite(c.alpha_check) &&
                  c.alpha_check >= 0 && c.alpha_check <= 1;
  return {ok, Fmt("beta=%.12g gamma=%.12g alpha=%.12g alpha_check=%.12g", beta,
                  gamma, c.alpha, c.alpha_check)};
}

Outcome TwoItemLp() {
  const double eps = 0.5;
  LpInstance lp;
  lp.profit = Eigen::Vector2d(1.0, eps);
  lp.constraints = Eigen::MatrixXd::Ones(1, 2);
  lp.capacity = Eigen::VectorXd::Ones(1);
  const LpObjective f(lp);
  const SetFunctionTable t = SetFunctionTable::Tabulate(f);
  const double gamma = UniformSubmodularityRatio(t, 2, 2).value;
  const double beta = UniformSupermodularityRatio(t, 2, 2).value;
  const double alpha = Curvature(t).alpha;
  const bool ok = std::abs(gamma - 1) <= 1e-7 &&
                  std::abs(beta - 2.0 / 3.0) <= 1e-7 &&
                  std::abs(beta - 1 / (1 + eps)) <= 1e-7 &&
                  std::abs(alpha - 1) <= 1e-7;
  return {ok, Fmt("gamma=%.12g beta=%.12g alpha=%.12g", gamma, beta, alpha)};
}

Outcome SpectralDominance() {
  const int d = 8;
  int checks = 0;
  int violations = 0;
  double min_gap = INFINITY;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const QuadraticLoss loss(testing::RandomQuadratic(12, d, 3000 + seed));
    const LossReductionOracle f(loss);
    const SetFunctionTable t = SetFunctionTable::Tabulate(f);
    for (int s = 1; s <= 3; ++s) {
      for (int u = 0; u + s <= d; ++u) {
        const SpectralRatioBounds b = SpectralRatioBoundsFor(loss.hessian(), u, s);
        const double gamma = UniformSubmodularityRatio(t, u, s).value;
        const double beta = UniformSupermodularityRatio(t, u, s).value;
        checks += 2;
        violations += b.gamma_lower > gamma + 1e-9;
        violations += b.beta_lower > beta + 1e-9;
        min_gap = std::min({min_gap, gamma - b.gamma_lower, beta - b.beta_lower});
      }
    }
  }
  return {violations == 0, Fmt("checks=%d violations=%d min_slack=%.3g", checks,
                               violations, min_gap)};
}

Outcome Sandwich() {
  int violations = 0;
  double worst = -INFINITY;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const int d = 4 + static_cast<int>(seed % 5);
    const auto inst = testing::RandomQuadratic(d + 4, d, 5000 + seed);
    const QuadraticLoss loss(inst);
    CounterRng rng(seed);
    std::vector<int> a;
    std::vector<int> b;
    for (int j = 0; j < d; ++j) {
      const uint64_t which = rng.UniformInt(3);
      if (which == 0) a.push_back(j);
      if (which == 1) b.push_back(j);
    }
    if (b.empty()) {
      b.push_back(a.empty() ? 0 : a.back());
      if (!a.empty()) a.pop_back();
    }
    const Subset sa(d, a);
    const Subset sb(d, b);
    const Subset ab = sa.Union(sb);

    // Independent evaluation of both sides.
    const Eigen::MatrixXd& h = loss.hessian();
    const Eigen::VectorXd g = loss.Gradient(loss.RestrictedArgmin(sa));
    Eigen::VectorXd gb(sb.size());
    Eigen::MatrixXd hbb(sb.size(), sb.size());
    for (int i = 0; i < sb.size(); ++i) {
      gb(i) = g(sb[i]);
      for (int j = 0; j < sb.size(); ++j) hbb(i, j) = h(sb[i], sb[j]);
    }
    Eigen::MatrixXd hab(ab.size(), ab.size());
    for (int i = 0; i < ab.size(); ++i) {
      for (int j = 0; j < ab.size(); ++j) hab(i, j) = h(ab[i], ab[j]);
    }
    const double nu =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hbb).eigenvalues().maxCoeff();
    const double mu =
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hab).eigenvalues().minCoeff();
    const double delta =
        QuadraticObjective(inst, ab) - QuadraticObjective(inst, sa);
    const double lower = gb.squaredNorm() / (2 * nu);
    const double upper = gb.squaredNorm() / (2 * mu);
    const double scale = std::max(upper, 1e-300);
    const bool local_ok = lower <= delta + 1e-8 * scale && delta <= upper + 1e-8 * scale;
    const SandwichResult lib = GradientSandwichCheck(loss, sa, sb);
    if (!local_ok || !lib.Holds(1e-8) ||
        std::abs(lib.delta - delta) > 1e-9 * std::max(1.0, delta)) {
      ++violations;
    }
    worst = std::max({worst, (lower - delta) / scale, (delta - upper) / scale});
  }
  return {violations == 0,
          Fmt("pairs=200 violations=%d worst_rel_excess=%.3g", violations, worst)};
}

enum class Family { kCoverage, kQuadratic, kLp };

Outcome ProductBound() {
  int runs = 0;
  int violations = 0;
  double min_margin = INFINITY;
  for (Family family : {Family::kCoverage, Family::kQuadratic, Family::kLp}) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      const int d = 10;
      const int k = 1 + static_cast<int>(seed % 4);
      std::unique_ptr<SetFunctionOracle> oracle;
      std::unique_ptr<QuadraticLoss> loss;
      if (family == Family::kCoverage) {
        oracle = std::make_unique<CoverageOracle>(
            GenerateCoverageInstance(d, 20, 0.2, 7000 + seed));
      } else if (family == Family::kQuadratic) {
        loss = std::make_unique<QuadraticLoss>(
            testing::RandomQuadratic(14, d, 7000 + seed, 0.5));
        oracle = std::make_unique<LossReductionOracle>(*loss);
      } else {
        oracle = std::make_unique<LpObjective>(
            GenerateLpInstance(d, 5, k, 7000 + seed));
      }
      const SetFunctionTable table = SetFunctionTable::Tabulate(*oracle);
      const double opt = ExhaustiveOpt(*oracle, k).value;
      for (int m : StageChoices(k)) {
        const BatchSchedule schedule = MakeBatchSchedule(k, m);
        const AlgoResult r = MultiGreedy(*oracle, k, m);
        std::vector<double> gammas;
        std::vector<double> betas;
        Subset prev = Subset::Empty(d);
        for (int i = 0; i < schedule.rounds(); ++i) {
          gammas.push_back(SubmodularityRatio(table, prev, k).value);
          betas.push_back(
              SupermodularityRatio(table, prev, schedule.batches[i]).value);
          prev = r.trajectory[i].set;
        }
        const double bound =
            MultiGreedyBound(gammas, betas, schedule.batches, k).product.ratio;
        const double margin = r.value - bound * opt;
        ++runs;
        if (margin < -1e-9 * std::max(1.0, opt)) ++violations;
        min_margin = std::min(min_margin, margin);
      }
    }
  }
  return {violations == 0, Fmt("runs=%d violations=%d min_margin=%.3g", runs,
                               violations, min_margin)};
}

Outcome OmpLossBound() {
  int runs = 0;
  int violations = 0;
  double min_margin = INFINITY;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const int d = 10;
    const int k = 1 + static_cast<int>(seed % 4);
    const QuadraticLoss loss(testing::RandomQuadratic(16, d, 9000 + seed, 0.5));
    const LossReductionOracle f(loss);
    const double l0 = loss.LossAtZero();
    const double l_star = l0 - ExhaustiveOpt(f, k).value;
    const RscRsmConstants mu = ComputeRscRsm(loss.hessian(), 2 * k, 2 * k);
    for (int m : StageChoices(k)) {
      const int b_max = MakeBatchSchedule(k, m).b_max();
      const RscRsmConstants nu = ComputeRscRsm(loss.hessian(), k, b_max);
      const AlgoResult r = MultiOmp(loss, k, m);
      const double l = loss.Loss(loss.RestrictedArgmin(r.solution));
      const double bound = l_star + std::exp(-mu.mu / nu.nu) * (l0 - l_star);
      const double margin = bound - l;
      ++runs;
      if (margin < -1e-9 * std::max(1.0, l0)) ++violations;
      min_margin = std::min(min_margin, margin);
    }
  }
  return {violations == 0, Fmt("runs=%d violations=%d min_margin=%.3g", runs,
                               violations, min_margin)};
}

Outcome ClassicRecovery() {
  int mismatches = 0;
  int coverage_violations = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const QuadraticLoss loss(testing::RandomQuadratic(20, 12, 11000 + seed));
    const LossReductionOracle f(loss);
    const int k = 2 + static_cast<int>(seed % 4);
    const AlgoResult g = Greedy(f, k);
    const AlgoResult mg = MultiGreedy(f, k, k);
    const AlgoResult o = Omp(loss, k);
    const AlgoResult mo = MultiOmp(loss, k, k);
    for (int i = 0; i < k; ++i) {
      mismatches += g.trajectory[i].set != mg.trajectory[i].set;
      mismatches += o.trajectory[i].set != mo.trajectory[i].set;
    }
    const CoverageOracle cov(GenerateCoverageInstance(10, 25, 0.2, 12000 + seed));
    for (int kc = 1; kc <= 4; ++kc) {
      const double opt = ExhaustiveOpt(cov, kc).value;
      if (Greedy(cov, kc).value < (1 - std::exp(-1.0)) * opt - 1e-12) {
        ++coverage_violations;
      }
    }
  }
  return {mismatches == 0 && coverage_violations == 0,
          Fmt("sequence_mismatches=%d coverage_violations=%d", mismatches,
              coverage_violations)};
}

Outcome Hardness() {
  const int triples[3][3] = {{2, 1, 6}, {3, 1, 8}, {3, 2, 8}};
  bool ok = true;
  std::string detail;
  for (const auto& t : triples) {
    const int k = t[0];
    const int r = t[1];
    const HardnessVerification v = VerifyHardness(k, r, t[2]);
    const double ell = k - r + 1;
    const double top = k * std::pow(ell, k - r);
    const double alpha = 1 - (ell / k) * std::pow((k - r) / ell, ell);
    const double spr = 1 / (2 + (r - 1) / ell);
    double p5 = 0;
    for (int m = 0; m <= r; ++m) {
      p5 = std::max(p5, std::abs(HardnessG(r, k, m, k) / HardnessG(r, k, k, k) - alpha));
    }
    const bool this_ok = v.Passed(1e-12) && HardnessG(r, k, k, k) == top &&
                         std::abs(v.gamma_k - 1) <= 1e-12 &&
                         p5 <= 1e-12 && std::abs(v.alpha - alpha) <= 1e-12 &&
                         v.beta_k >= spr - 1e-12;
    ok = ok && this_ok;
    detail += Fmt("(%d,%d,%d):%s beta_k=%.4g ", k, r, t[2],
                  this_ok ? "ok" : "bad", v.beta_k);
  }
  return {ok, detail};
}

Outcome Fpt() {
  const ModularOracle f(ModularInstance{{4, 3, 2, 1}});
  FptParams p;
  p.f_tilde = 3;
  p.epsilon = 1;
  p.delta = 0.5;
  p.k = 2;
  const int64_t t = FptIterations(p);
  int wins = 0;
  for (int trial = 0; trial < 200; ++trial) {
    wins += FptRandomized(f, 2, t, static_cast<uint64_t>(trial) * t).value >= 6.0;
  }
  const double freq = wins / 200.0;
  const double floor = 0.5 - 3 * std::sqrt(0.25 / 200);
  return {t == 12 && freq >= floor,
          Fmt("T=%lld success=%.3f floor=%.3f", static_cast<long long>(t), freq,
              floor)};
}

Outcome LpReproduction() {
  const int d = 50;
  int cells = 0;
  int close = 0;
  int budget_violations = 0;
  for (int k = 5; k <= 50; k += 5) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      const LpObjective f(GenerateLpInstance(d, 100, k, 20000 + seed));
      const AlgoResult g = Greedy(f, k);
      const AlgoResult mg = MultiGreedy(f, k, 2);
      ++cells;
      close += mg.value >= 0.95 * g.value;
      if (mg.oracle_evals > 2 * d + 3 || g.oracle_evals < d * k / 2) {
        ++budget_violations;
      }
    }
  }
  const double frac = static_cast<double>(close) / cells;
  return {frac >= 0.9 && budget_violations == 0,
          Fmt("cells=%d within_95pct=%.3f budget_violations=%d", cells, frac,
              budget_violations)};
}

Outcome SingleStageGap() {
  const int k = 10;
  const double eps = 1e-3;
  const CoverageOracle f(SingleStageGapCoverage(k, eps));
  const double opt = ExhaustiveOpt(f, k).value;
  const double oblivious = Oblivious(f, k).value;
  const double greedy = Greedy(f, k).value;
  const double want = (1 + k * eps) / (k + eps);
  const double ratio = oblivious / opt;
  const bool ok = std::abs(opt - (k + eps)) <= 1e-12 &&
                  std::abs(ratio - want) <= 1e-12 &&
                  std::abs(greedy - opt) <= 1e-12;
  return {ok, Fmt("oblivious_ratio=%.15g closed_form=%.15g greedy/opt=%.15g",
                  ratio, want, greedy / opt)};
}

Outcome Thresholding() {
  int iht_hits = 0;
  int htp_hits = 0;
  int momp_wins = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    RegressionOptions o;
    o.d = 60;
    o.k = 6;
    o.n = 400;
    o.noise = 0;
    const SyntheticData well = GenerateSyntheticRegression(o, 30000 + seed);
    const QuadraticLoss well_loss(ToQuadraticInstance(well));
    iht_hits += Iht(well_loss, 6).result.solution == well.true_support;
    htp_hits += Htp(well_loss, 6).result.solution == well.true_support;

    o.noise = 0.1;
    o.conditioning = Conditioning::kIll;
    const SyntheticData ill = GenerateSyntheticRegression(o, 40000 + seed);
    const QuadraticLoss ill_loss(ToQuadraticInstance(ill));
    const double iht_loss = ill_loss.Loss(Iht(ill_loss, 6).x);
    const AlgoResult momp = MultiOmp(ill_loss, 6, 2);
    const double momp_loss = ill_loss.Loss(ill_loss.RestrictedArgmin(momp.solution));
    momp_wins += momp_loss <= iht_loss;
  }
  return {iht_hits >= 95 && htp_hits >= 95 && momp_wins >= 70,
          Fmt("iht_recovery=%d htp_recovery=%d momp_beats_iht=%d", iht_hits,
              htp_hits, momp_wins)};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "coverage triangle ratios", 1, CoverageTriangle},
      {2, "two-item LP ratios", 1, TwoItemLp},
      {3, "spectral lower bounds dominated", 120, SpectralDominance},
      {4, "gradient sandwich", 120, Sandwich},
      {5, "multi-greedy product bound", 600, ProductBound},
      {6, "multi-OMP loss bound", 600, OmpLossBound},
      {7, "greedy and OMP recovery", 600, ClassicRecovery},
      {8, "hardness construction", 300, Hardness},
      {9, "FPT success frequency", 30, Fpt},
      {10, "LP multi-greedy vs greedy", 900, LpReproduction},
      {11, "single-stage gap", 60, SingleStageGap},
      {12, "IHT/HTP sanity", 600, Thresholding},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool pass = out.pass && secs < c.limit_seconds;
    failures += !pass;
    std::printf("criterion %2d %s: %s | %s | %.2fs (limit %.0fs)\n", c.id,
                c.name, pass ? "PASS" : "FAIL", out.detail.c_str(), secs,
                c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace wmax

int main() { return wmax::Main(); }
