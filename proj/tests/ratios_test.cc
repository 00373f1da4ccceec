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
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "wmax/core/errors.h"
#include "wmax/core/rng.h"
#include "wmax/core/subset.h"
#include "wmax/objectives/coverage.h"
#include "wmax/objectives/lp_objective.h"
#include "wmax/objectives/modular.h"
#include "wmax/objectives/quadratic_loss.h"
#include "wmax/ratios/hardness_check.h"
#include "wmax/ratios/ratios.h"
#include "wmax/ratios/set_function_table.h"
#include "wmax/ratios/spectral.h"

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

// Two copies of B = [[1, 1], [0, 1]] with targets (0, 1) and (1, 1), plus
// one identity coordinate with target 0.
QuadraticLossInstance BlockInstance() {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(5, 5);
  a.block<2, 2>(0, 0) << 1, 1, 0, 1;
  a.block<2, 2>(2, 2) << 1, 1, 0, 1;
  a(4, 4) = 1;
  Eigen::VectorXd y(5);
  y << 0, 1, 1, 1, 0;
  return QuadraticLossInstance{a, y};
}

TEST(RatiosTest, ModularIsExact) {
  const ModularOracle f(ModularInstance{{0.5, 1, 2, 3}});
  const Subset u = Subset::Full(4);
  EXPECT_DOUBLE_EQ(SubmodularityRatio(f, u, 4).value, 1.0);
  EXPECT_DOUBLE_EQ(SupermodularityRatio(f, u, 4).value, 1.0);
  const CurvatureValues c = Curvature(f);
  EXPECT_NEAR(c.alpha, 0.0, 1e-15);
  EXPECT_NEAR(c.alpha_check, 0.0, 1e-15);
}

TEST(RatiosTest, CoverageTriangle) {
  const CoverageOracle f(TriangleCoverage());
  const Subset u = Subset::Full(3);
  EXPECT_DOUBLE_EQ(SubmodularityRatio(f, u, 3).value, 1.0);
  const RatioValue beta = SupermodularityRatio(f, u, 3);
  EXPECT_DOUBLE_EQ(beta.value, 0.5);
  ASSERT_TRUE(beta.has_witness);
  EXPECT_EQ(beta.context, Subset::Empty(3));
  EXPECT_EQ(beta.batch, Subset::Full(3));
  EXPECT_DOUBLE_EQ(Curvature(f).alpha, 1.0);
  EXPECT_EQ(CoverMultiplicity(f.instance(), 3), 2);
}

TEST(RatiosTest, TwoItemLp) {
  const LpObjective f(TwoItemLp(0.5));
  const Subset u = Subset::Full(2);
  EXPECT_NEAR(SubmodularityRatio(f, u, 2).value, 1.0, 1e-12);
  const RatioValue beta = SupermodularityRatio(f, u, 2);
  EXPECT_NEAR(beta.value, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(beta.batch, Subset::Full(2));
  EXPECT_NEAR(Curvature(f).alpha, 1.0, 1e-12);
}

TEST(RatiosTest, ZeroOverZeroIsOne) {
  const ModularOracle f(ModularInstance{{0, 0, 0}});
  const RatioValue g = SubmodularityRatio(f, Subset::Full(3), 3);
  EXPECT_EQ(g.value, 1.0);
  EXPECT_FALSE(g.has_witness);
  EXPECT_EQ(SupermodularityRatio(f, Subset::Full(3), 3).value, 1.0);
}

TEST(RatiosTest, CapacityLimits) {
  const ModularOracle big(ModularInstance{std::vector<double>(15, 1.0)});
  EXPECT_THROW(SubmodularityRatio(big, Subset::Empty(15), 1), CapacityError);
  const ModularOracle mid(ModularInstance{std::vector<double>(13, 1.0)});
  EXPECT_THROW(Curvature(mid), CapacityError);
}

TEST(RatiosTest, CoverMultiplicityCases) {
  CoverageInstance disjoint{4, {1, 1, 1, 1}, {{0}, {1}, {2}, {3}}};
  EXPECT_EQ(CoverMultiplicity(disjoint, 4), 1);
  CoverageInstance same{1, {1}, {{0}, {0}, {0}, {0}, {0}}};
  EXPECT_EQ(CoverMultiplicity(same, 5), 5);
  EXPECT_EQ(CoverMultiplicity(same, 3), 3);
}

class RandomOracleTest : public ::testing::TestWithParam<uint64_t> {};

TEST_P(RandomOracleTest, PropertiesAndSerialAgreement) {
  const uint64_t seed = GetParam();
  const QuadraticLoss loss(RandomQuadratic(9, 7, seed, 0.5));
  const LossReductionOracle f(loss);
  const SetFunctionTable table = SetFunctionTable::Tabulate(f);
  const SetFunctionTable table_serial = serial::Tabulate(f);
  ASSERT_EQ(table.values(), table_serial.values());

  CounterRng rng(seed);
  const Subset u = Subset::FromMask(7, rng.UniformInt(128));
  for (int s = 1; s <= 3; ++s) {
    const RatioValue g = SubmodularityRatio(table, u, s);
    const RatioValue b = SupermodularityRatio(table, u, s);
    const RatioValue gs = serial::SubmodularityRatio(table, u, s);
    const RatioValue bs = serial::SupermodularityRatio(table, u, s);
    EXPECT_EQ(g.value, gs.value);
    EXPECT_EQ(g.context, gs.context);
    EXPECT_EQ(g.batch, gs.batch);
    EXPECT_EQ(b.value, bs.value);
    EXPECT_EQ(b.context, bs.context);
    EXPECT_EQ(b.batch, bs.batch);
    EXPECT_GE(g.value, 0.0);
    EXPECT_LE(g.value, 1.0);
    EXPECT_GE(b.value, 1.0 / s - 1e-12);
    EXPECT_LE(b.value, 1.0 + 1e-12);
    if (s > 1) {
      EXPECT_GE(SubmodularityRatio(table, u, s - 1).value, g.value);
      EXPECT_GE(SupermodularityRatio(table, u, s - 1).value, b.value);
    }
    const Subset smaller = u.empty() ? u : u.Without(u[0]);
    EXPECT_GE(SubmodularityRatio(table, smaller, s).value, g.value);
    EXPECT_GE(SupermodularityRatio(table, smaller, s).value, b.value);
  }
  for (int uu = 0; uu <= 2; ++uu) {
    EXPECT_EQ(UniformSubmodularityRatio(table, uu, 2).value,
              serial::UniformSubmodularityRatio(table, uu, 2).value);
    EXPECT_EQ(UniformSupermodularityRatio(table, uu, 2).value,
              serial::UniformSupermodularityRatio(table, uu, 2).value);
  }
  const CurvatureValues c = Curvature(table);
  const CurvatureValues cs = serial::Curvature(table);
  EXPECT_EQ(c.alpha, cs.alpha);
  EXPECT_EQ(c.alpha_check, cs.alpha_check);
  const Subset full = Subset::Full(7);
  EXPECT_GE(SupermodularityRatio(table, full, 7).value, 1.0 - c.alpha - 1e-12);
  EXPECT_GE(SubmodularityRatio(table, full, 7).value,
            1.0 - c.alpha_check - 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomOracleTest,
                         ::testing::Range<uint64_t>(0, 8));

TEST(RatiosTest, CoverageBoundFromMultiplicity) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    CounterRng rng(seed);
    CoverageInstance inst;
    inst.universe_size = 10;
    for (int v = 0; v < 10; ++v) inst.weights.push_back(rng.Uniform01());
    for (int j = 0; j < 7; ++j) {
      std::vector<int> g;
      for (int v = 0; v < 10; ++v) {
        if (rng.Uniform01() < 0.35) g.push_back(v);
      }
      inst.groups.push_back(g);
    }
    const CoverageOracle f(inst);
    const SetFunctionTable t = SetFunctionTable::Tabulate(f);
    for (int s = 1; s <= 4; ++s) {
      const double bound = 1.0 / CoverMultiplicity(inst, s);
      EXPECT_GE(UniformSupermodularityRatio(t, 7, s).value, bound - 1e-12);
    }
    EXPECT_NEAR(UniformSubmodularityRatio(t, 7, 7).value, 1.0, 1e-12);
  }
}

TEST(SpectralTest, IdentityDesign) {
  const auto inst = IdentityQuadratic(Eigen::VectorXd::Ones(4));
  for (int s = 1; s <= 4; ++s) {
    const RscRsmConstants c = ComputeRscRsm(inst, s, s);
    EXPECT_NEAR(c.mu, 0.25, 1e-12);
    EXPECT_NEAR(c.nu, 0.25, 1e-12);
  }
}

TEST(SpectralTest, FullSupportMatchesGlobalSpectrum) {
  const auto inst = RandomQuadratic(4, 4, 3);
  const QuadraticLoss loss(inst);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(loss.hessian());
  const RscRsmConstants c = ComputeRscRsm(inst, 4, 4);
  EXPECT_NEAR(c.mu, eig.eigenvalues().minCoeff(), 1e-10);
  EXPECT_NEAR(c.nu, eig.eigenvalues().maxCoeff(), 1e-10);
}

TEST(SpectralTest, SerialAgrees) {
  const QuadraticLoss loss(RandomQuadratic(12, 9, 4));
  for (int s = 1; s <= 4; ++s) {
    const RscRsmConstants a = ComputeRscRsm(loss.hessian(), s, 2 * s);
    const RscRsmConstants b = serial::ComputeRscRsm(loss.hessian(), s, 2 * s);
    EXPECT_EQ(a.mu, b.mu);
    EXPECT_EQ(a.nu, b.nu);
    EXPECT_EQ(a.support_size, std::min(2 * s, 9));
  }
}

TEST(SpectralTest, BlockInstanceBounds) {
  const QuadraticLossInstance inst = BlockInstance();
  const double floor = (3 - std::sqrt(5.0)) / (3 + std::sqrt(5.0));
  const RscRsmConstants c = ComputeRscRsm(inst, 5, 5);
  EXPECT_NEAR(c.condition_number(), 1.0 / floor, 1e-9);
  const QuadraticLoss loss(inst);
  const LossReductionOracle f(loss);
  const SetFunctionTable t = SetFunctionTable::Tabulate(f);
  const CurvatureValues curv = Curvature(t);
  EXPECT_NEAR(curv.alpha, 1.0, 1e-12);
  EXPECT_NEAR(curv.alpha_check, 1.0, 1e-12);
  const SpectralRatioBounds b = RatioBoundsFromSpectrum(c.mu, c.nu);
  EXPECT_NEAR(b.gamma_lower, floor, 1e-9);
  for (int s = 1; s <= 4; ++s) {
    EXPECT_GE(UniformSubmodularityRatio(t, 5 - s, s).value, floor - 1e-9);
    EXPECT_GE(UniformSupermodularityRatio(t, 5 - s, s).value, floor - 1e-9);
  }
}

TEST(SpectralTest, RatioBoundArithmetic) {
  const SpectralRatioBounds same = RatioBoundsFromSpectrum(2, 2);
  EXPECT_EQ(same.gamma_lower, 1.0);
  EXPECT_EQ(same.beta_lower, 1.0);
  const SpectralRatioBounds half = RatioBoundsFromSpectrum(1, 2);
  EXPECT_EQ(half.gamma_lower, 0.5);
  EXPECT_EQ(half.beta_lower, 0.5);
  EXPECT_THROW(RatioBoundsFromSpectrum(0, 1), DomainError);
  EXPECT_THROW(RatioBoundsFromSpectrum(-1, 1), DomainError);
}

TEST(SandwichTest, Examples) {
  const QuadraticLoss id(IdentityQuadratic(Eigen::Vector3d(1, 2, 3)));
  const SandwichResult empty =
      GradientSandwichCheck(id, Subset(3, {0}), Subset::Empty(3));
  EXPECT_EQ(empty.lower, 0.0);
  EXPECT_EQ(empty.delta, 0.0);
  EXPECT_EQ(empty.upper, 0.0);
  const SandwichResult one =
      GradientSandwichCheck(id, Subset::Empty(3), Subset(3, {0}));
  const double f0 = id.LossReduction(Subset(3, {0}));
  EXPECT_NEAR(one.lower, f0, 1e-14);
  EXPECT_NEAR(one.delta, f0, 1e-14);
  EXPECT_NEAR(one.upper, f0, 1e-14);
  EXPECT_THROW(GradientSandwichCheck(id, Subset(3, {0}), Subset(3, {0, 1})),
               DomainError);

  const QuadraticLoss loss(RandomQuadratic(6, 6, 17));
  const SandwichResult r =
      GradientSandwichCheck(loss, Subset(6, {0, 3}), Subset(6, {1, 5}));
  EXPECT_TRUE(r.Holds());
  EXPECT_LE(r.lower, r.upper);
}

TEST(HardnessCheckTest, AcceptanceTriples) {
  const int triples[3][3] = {{2, 1, 6}, {3, 1, 8}, {3, 2, 8}};
  for (const auto& t : triples) {
    const HardnessVerification v = VerifyHardness(t[0], t[1], t[2]);
    EXPECT_TRUE(v.Passed()) << v.ToString();
  }
  EXPECT_GE(VerifyHardness(3, 2, 8).beta_k, 0.4);
  EXPECT_THROW(VerifyHardness(3, 4, 8), DomainError);
}

}  // namespace
}  // namespace wmax
