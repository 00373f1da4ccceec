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

#include <cmath>
#include <sstream>
#include <variant>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wmax/core/errors.h"
#include "wmax/core/rng.h"
#include "wmax/core/subset.h"
#include "wmax/objectives/coverage.h"
#include "wmax/objectives/hardness.h"
#include "wmax/objectives/instance_io.h"
#include "wmax/objectives/logistic_loss.h"
#include "wmax/objectives/lp_objective.h"
#include "wmax/objectives/lp_solver.h"
#include "wmax/objectives/modular.h"
#include "wmax/objectives/quadratic_loss.h"

namespace wmax {
namespace {

using testing::IdentityQuadratic;
using testing::RandomQuadratic;

LpInstance TwoItemLp(double eps) {
  LpInstance lp;
  lp.profit = Eigen::Vector2d(1.0, eps);
  lp.constraints = Eigen::MatrixXd::Ones(1, 2);
  lp.capacity = Eigen::VectorXd::Ones(1);
  return lp;
}

TEST(QuadraticTest, RestrictedArgminExamples) {
  const auto inst = IdentityQuadratic(Eigen::Vector2d(1, 2));
  EXPECT_TRUE(RestrictedArgminQuadratic(inst, Subset::Empty(2)).isZero());
  EXPECT_TRUE(RestrictedArgminQuadratic(inst, Subset::Full(2))
                  .isApprox(Eigen::Vector2d(1, 2)));
  EXPECT_TRUE(RestrictedArgminQuadratic(inst, Subset(2, {1}))
                  .isApprox(Eigen::Vector2d(0, 2)));
}

TEST(QuadraticTest, ObjectiveExamples) {
  const auto inst = IdentityQuadratic(Eigen::Vector2d(1, 2));
  EXPECT_DOUBLE_EQ(QuadraticObjective(inst, Subset::Empty(2)), 0.0);
  EXPECT_NEAR(QuadraticObjective(inst, Subset::Full(2)), 1.25, 1e-14);
  EXPECT_NEAR(QuadraticObjective(inst, Subset(2, {1})), 1.0, 1e-14);
}

TEST(QuadraticTest, RestrictedGradientVanishes) {
  const auto inst = RandomQuadratic(20, 8, 5);
  const QuadraticLoss loss(inst);
  const Subset s(8, {1, 4, 6});
  const Eigen::VectorXd x = loss.RestrictedArgmin(s);
  const Eigen::VectorXd g = loss.Gradient(x);
  for (int j : s) EXPECT_NEAR(g(j), 0.0, 1e-10);
  for (int j = 0; j < 8; ++j) {
    if (!s.Contains(j)) {
      EXPECT_EQ(x(j), 0.0);
    }
  }
  EXPECT_NEAR(loss.LossReduction(s), loss.LossAtZero() - loss.Loss(x), 1e-12);
}

TEST(QuadraticTest, SingularDesignUsesLeastNorm) {
  Eigen::MatrixXd a(3, 2);
  a << 1, 1, 2, 2, 3, 3;
  const QuadraticLossInstance inst{a, Eigen::Vector3d(1, 2, 3)};
  const Eigen::VectorXd x = RestrictedArgminQuadratic(inst, Subset::Full(2));
  EXPECT_NEAR(x(0), 0.5, 1e-10);
  EXPECT_NEAR(x(1), 0.5, 1e-10);
}

TEST(QuadraticTest, MonotoneAndNormalized) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = RandomQuadratic(12, 8, seed);
    const QuadraticLoss loss(inst);
    const LossReductionOracle f(loss);
    EXPECT_EQ(f.Value(Subset::Empty(8)), 0.0);
    CounterRng rng(seed + 100);
    for (int chain = 0; chain < 20; ++chain) {
      Subset s = Subset::Empty(8);
      double prev = 0.0;
      for (int step = 0; step < 8; ++step) {
        int j;
        do {
          j = static_cast<int>(rng.UniformInt(8));
        } while (s.Contains(j));
        s = s.With(j);
        const double v = f.Value(s);
        EXPECT_GE(v, prev - 1e-12);
        prev = v;
      }
    }
  }
}

double BisectLogisticRoot() {
  // Root of x - 1/(1 + e^x).
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid - 1.0 / (1.0 + std::exp(mid)) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

TEST(LogisticTest, OneDimensionalMinimizer) {
  const LogisticLossInstance inst{Eigen::MatrixXd::Ones(1, 1),
                                  Eigen::VectorXd::Ones(1), 1.0};
  const Eigen::VectorXd x = RestrictedArgminLogistic(inst, Subset::Full(1));
  EXPECT_NEAR(x(0), BisectLogisticRoot(), 1e-10);
  EXPECT_TRUE(RestrictedArgminLogistic(inst, Subset::Empty(1)).isZero());
}

TEST(LogisticTest, HeavyRidgeShrinksToZero) {
  const auto q = RandomQuadratic(30, 5, 2);
  Eigen::VectorXd labels = q.target.unaryExpr([](double v) {
    return v >= 0 ? 1.0 : -1.0;
  });
  const LogisticLossInstance inst{q.design, labels, 1e6};
  const Eigen::VectorXd x = RestrictedArgminLogistic(inst, Subset::Full(5));
  EXPECT_LT(x.cwiseAbs().maxCoeff(), 1e-5);
}

TEST(LogisticTest, RestrictedGradientSmall) {
  const auto q = RandomQuadratic(40, 6, 9);
  Eigen::VectorXd labels = q.target.unaryExpr([](double v) {
    return v >= 0 ? 1.0 : -1.0;
  });
  const LogisticLoss loss(LogisticLossInstance{q.design, labels, 0.01});
  const Subset s(6, {0, 2, 5});
  const Eigen::VectorXd g = loss.Gradient(loss.RestrictedArgmin(s));
  for (int j : s) EXPECT_LT(std::abs(g(j)), 1e-8);
}

TEST(LogisticTest, NonConvergenceReportsResidual) {
  const LogisticLossInstance inst{Eigen::MatrixXd::Ones(1, 1),
                                  Eigen::VectorXd::Ones(1), 1.0};
  const LogisticLoss loss(inst, NewtonOptions{1e-300, 1});
  try {
    loss.RestrictedArgmin(Subset::Full(1));
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GE(e.residual(), 0.0);
  }
}

TEST(LpTest, TwoItemExample) {
  const LpObjective f(TwoItemLp(0.5));
  EXPECT_NEAR(f.Value(Subset(2, {0})), 1.0, 1e-12);
  EXPECT_NEAR(f.Value(Subset(2, {1})), 0.5, 1e-12);
  EXPECT_NEAR(f.Value(Subset::Full(2)), 1.0, 1e-12);
  EXPECT_EQ(f.Value(Subset::Empty(2)), 0.0);
}

TEST(LpTest, ZeroProfit) {
  LpInstance lp = TwoItemLp(0.5);
  lp.profit.setZero();
  const LpObjective f(lp);
  for (const Subset& s : EnumerateSubsets(2, 2)) EXPECT_EQ(f.Value(s), 0.0);
}

// Best vertex of {x in [0,1]^S : A x <= b} by brute-force enumeration of
// active constraint sets.
double VertexEnumerationLp(const LpInstance& lp, const Subset& s) {
  const int k = s.size();
  if (k == 0) return 0.0;
  const int m = lp.rows();
  // Rows: m constraints, then x_j <= 1, then -x_j <= 0.
  const int rows = m + 2 * k;
  Eigen::MatrixXd g(rows, k);
  Eigen::VectorXd h(rows);
  g.setZero();
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < k; ++c) g(i, c) = lp.constraints(i, s[c]);
    h(i) = lp.capacity(i);
  }
  for (int c = 0; c < k; ++c) {
    g(m + c, c) = 1;
    h(m + c) = 1;
    g(m + k + c, c) = -1;
    h(m + k + c) = 0;
  }
  double best = -1.0;
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  do {
    Eigen::MatrixXd sub(k, k);
    Eigen::VectorXd rhs(k);
    for (int i = 0; i < k; ++i) {
      sub.row(i) = g.row(combo[i]);
      rhs(i) = h(combo[i]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd x = lu.solve(rhs);
    if (((g * x - h).array() <= 1e-9).all()) {
      double v = 0;
      for (int c = 0; c < k; ++c) v += lp.profit(s[c]) * x(c);
      best = std::max(best, v);
    }
  } while (NextCombination(rows, &combo));
  return best;
}

TEST(LpTest, MatchesVertexEnumeration) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    CounterRng rng(seed);
    LpInstance lp;
    lp.profit = Eigen::VectorXd(4);
    lp.constraints = Eigen::MatrixXd(3, 4);
    lp.capacity = Eigen::VectorXd(3);
    for (int j = 0; j < 4; ++j) lp.profit(j) = rng.Uniform01();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 4; ++j) lp.constraints(i, j) = rng.Uniform01();
      lp.capacity(i) = rng.Uniform(0.2, 1.5);
    }
    const LpObjective f(lp);
    double prev_full = 0;
    for (const Subset& s : EnumerateSubsets(4, 4)) {
      EXPECT_NEAR(f.Value(s), VertexEnumerationLp(lp, s), 1e-8)
          << "seed " << seed << " S " << s.ToString();
      if (s.size() == 4) prev_full = f.Value(s);
    }
    EXPECT_GE(prev_full, 0.0);
  }
}

TEST(LpSolverTest, InfeasibleAndUnbounded) {
  Eigen::MatrixXd a(1, 1);
  a << 1;
  EXPECT_EQ(SolveDenseLp(a, Eigen::VectorXd::Constant(1, -1),
                         Eigen::VectorXd::Ones(1))
                .status,
            LpStatus::kInfeasible);
  a << -1;
  EXPECT_EQ(
      SolveDenseLp(a, Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1)).status,
      LpStatus::kUnbounded);
}

TEST(LpSolverTest, NegativeRhsPhaseOne) {
  // max x1 + x2, x1 + x2 <= 4, -x1 <= -1, x2 <= 2.
  Eigen::MatrixXd a(3, 2);
  a << 1, 1, -1, 0, 0, 1;
  const LpSolution sol =
      SolveDenseLp(a, Eigen::Vector3d(4, -1, 2), Eigen::Vector2d(1, 1));
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.objective, 4.0, 1e-12);
  EXPECT_GE(sol.x(0), 1.0 - 1e-12);
}

TEST(LpTest, InfeasibleRestrictionThrows) {
  LpInstance lp = TwoItemLp(0.5);
  lp.capacity(0) = -1;
  EXPECT_THROW(LpObjective(lp).Value(Subset(2, {0})), InfeasibleError);
}

TEST(CoverageTest, TriangleValues) {
  const CoverageOracle f(TriangleCoverage());
  EXPECT_EQ(f.Value(Subset(3, {0})), 2.0);
  EXPECT_EQ(f.Value(Subset(3, {0, 1})), 3.0);
  EXPECT_EQ(f.Value(Subset::Full(3)), 3.0);
  EXPECT_EQ(f.Value(Subset::Empty(3)), 0.0);
}

TEST(CoverageTest, SingleStageGapInstance) {
  const CoverageInstance inst = SingleStageGapCoverage(2, 0.1);
  EXPECT_NEAR(CoverageValue(inst, Subset(4, {2, 3})), 1.2, 1e-12);
  EXPECT_NEAR(CoverageValue(inst, Subset(4, {1, 2})), 2.1, 1e-12);
}

TEST(CoverageTest, MatchesBruteForceUnion) {
  CounterRng rng(11);
  CoverageInstance inst;
  inst.universe_size = 12;
  for (int v = 0; v < 12; ++v) inst.weights.push_back(rng.Uniform01());
  for (int j = 0; j < 6; ++j) {
    std::vector<int> group;
    for (int v = 0; v < 12; ++v) {
      if (rng.Uniform01() < 0.3) group.push_back(v);
    }
    inst.groups.push_back(group);
  }
  const CoverageOracle f(inst);
  for (const Subset& s : EnumerateSubsets(6, 6)) {
    std::vector<bool> covered(12, false);
    for (int j : s) {
      for (int v : inst.groups[j]) covered[v] = true;
    }
    double want = 0;
    for (int v = 0; v < 12; ++v) want += covered[v] ? inst.weights[v] : 0.0;
    EXPECT_NEAR(f.Value(s), want, 1e-12);
  }
}

TEST(CoverageTest, RejectsBadInput) {
  CoverageInstance inst = TriangleCoverage();
  inst.groups[0].push_back(7);
  EXPECT_THROW(CoverageOracle{inst}, DomainError);
  inst = TriangleCoverage();
  inst.weights[0] = -1;
  EXPECT_THROW(CoverageOracle{inst}, DomainError);
}

TEST(HardnessTest, HValues) {
  for (int ell = 1; ell <= 5; ++ell) EXPECT_EQ(HardnessH(ell, ell, 0, 0), 0.0);
  EXPECT_EQ(HardnessH(2, 3, 2, 2), 4.0);
  EXPECT_EQ(HardnessH(2, 3, 0, 1), 2.0);
  EXPECT_THROW(HardnessH(0, 3, 0, 0), DomainError);
  EXPECT_THROW(HardnessH(2, 3, 3, 3), DomainError);
  EXPECT_THROW(HardnessH(2, 3, 2, 1), DomainError);
}

TEST(HardnessTest, GValues) {
  EXPECT_EQ(HardnessG(2, 3, 3, 3), 6.0);
  EXPECT_EQ(HardnessG(2, 3, 0, 1), 2.0);
  EXPECT_EQ(HardnessG(2, 3, 0, 5), HardnessG(2, 3, 1, 5));
  EXPECT_EQ(HardnessG(2, 3, 1, 5), HardnessG(2, 3, 2, 5));
  EXPECT_THROW(HardnessG(4, 3, 0, 0), DomainError);
  EXPECT_THROW(HardnessG(2, 3, 2, 1), DomainError);
}

TEST(HardnessTest, BranchesAgreeAtBoundary) {
  for (int k = 1; k <= 6; ++k) {
    for (int r = 1; r <= k; ++r) {
      const int ell = k - r + 1;
      for (int n = r; n <= 3 * k; ++n) {
        const double second =
            (r - 1) * HardnessH(ell, ell, 0, 1) +
            HardnessH(ell, ell, 0, n - r + 1);
        const double third = (r - 1) * HardnessH(ell, ell, 0, 1) +
                             HardnessH(ell, ell, 1, n - r + 1);
        EXPECT_EQ(second, third);
        if (r <= std::min(n, k)) {
          EXPECT_EQ(HardnessG(r, k, r, n), second);
        }
      }
    }
  }
}

TEST(HardnessTest, OracleValues) {
  const HardnessOracle f(MakeHardnessInstance(3, 2, 8));
  EXPECT_EQ(f.Value(Subset(8, {0, 1, 2})), 6.0);
  EXPECT_EQ(f.Value(Subset::Empty(8)), 0.0);
  const Subset big_in(8, {0, 1, 2, 3, 4, 5});
  const Subset big_out(8, {0, 3, 4, 5, 6, 7});
  EXPECT_EQ(f.Value(big_in), f.Value(big_out));
  EXPECT_THROW(MakeHardnessInstance(3, 1, 5), DomainError);
}

TEST(ModularTest, SumOfWeights) {
  const ModularOracle f(ModularInstance{{4, 3, 2, 1}});
  EXPECT_EQ(f.Value(Subset(4, {0, 3})), 5.0);
  EXPECT_THROW(ModularOracle(ModularInstance{{1, -1}}), DomainError);
}

template <typename T>
T RoundTrip(const T& value) {
  std::stringstream ss;
  WriteInstance(Instance(value), ss);
  return std::get<T>(ReadInstance(ss));
}

TEST(InstanceIoTest, RoundTripsEveryFamily) {
  const auto q = RandomQuadratic(5, 3, 1);
  const auto q2 = RoundTrip(q);
  EXPECT_EQ(q2.design, q.design);
  EXPECT_EQ(q2.target, q.target);

  const LogisticLossInstance lg{q.design, Eigen::VectorXd::Ones(5), 0.25};
  const auto lg2 = RoundTrip(lg);
  EXPECT_EQ(lg2.design, lg.design);
  EXPECT_EQ(lg2.ridge, 0.25);

  const LpInstance lp = TwoItemLp(0.5);
  const auto lp2 = RoundTrip(lp);
  EXPECT_EQ(lp2.profit, lp.profit);
  EXPECT_EQ(lp2.constraints, lp.constraints);
  EXPECT_EQ(lp2.capacity, lp.capacity);

  const CoverageInstance cov = TriangleCoverage();
  const auto cov2 = RoundTrip(cov);
  EXPECT_EQ(cov2.groups, cov.groups);
  EXPECT_EQ(cov2.weights, cov.weights);

  const HardnessInstance h = MakeHardnessInstance(2, 1, 6);
  const auto h2 = RoundTrip(h);
  EXPECT_EQ(h2.hidden, h.hidden);
  EXPECT_EQ(h2.r, 1);

  const ModularInstance mod{{4, 3, 2, 1}};
  EXPECT_EQ(RoundTrip(mod).weights, mod.weights);
}

TEST(InstanceIoTest, ParseErrorCarriesPosition) {
  std::stringstream ss("# comment\nquadratic 1 1\n1 abc\n");
  try {
    ReadInstance(ss);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 2);  // field index
  }
  std::stringstream bad("mystery 1\n");
  EXPECT_THROW(ReadInstance(bad), ParseError);
  std::stringstream short_rows("quadratic 2 1\n1 2\n");
  EXPECT_THROW(ReadInstance(short_rows), ParseError);
}

TEST(InstanceIoTest, BindObjective) {
  const BoundObjective q = BindObjective(Instance(RandomQuadratic(5, 3, 1)));
  EXPECT_NE(q.loss, nullptr);
  EXPECT_EQ(q.oracle->ground_size(), 3);
  const BoundObjective c = BindObjective(Instance(TriangleCoverage()));
  EXPECT_EQ(c.loss, nullptr);
  EXPECT_EQ(c.oracle->Value(Subset::Full(3)), 3.0);
}

}  // namespace
}  // namespace wmax
