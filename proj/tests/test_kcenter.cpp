// Copyright 2026 The colorful-radii Authors
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

#include <gtest/gtest.h>

#include <random>

#include "sumradii/kcenter.hpp"
#include "sumradii/oracle.hpp"
#include "sumradii/sor7.hpp"
#include "testutil.hpp"

namespace sumradii {
namespace {

struct Fixture {
  Instance inst;
  detail::BallGeometry geom;
  KCenterSolver solver;

  explicit Fixture(Instance i, KCenterOptions opts = {})
      : inst(std::move(i)), geom(inst), solver(inst, geom, opts) {}
};

TEST(KCenterFeasible, Color4Examples) {
  Fixture f(testing::color4());
  ResidualInstance res = full_residual(f.inst);

  res.required = {1, 1};
  const auto centers = f.solver.feasible(res, 1, 1.0);
  ASSERT_TRUE(centers.has_value());
  EXPECT_EQ(*centers, (std::vector<int>{0}));

  res.required = {2, 2};
  EXPECT_FALSE(f.solver.feasible(res, 1, 1.0).has_value());

  res.required = {0, 0};
  const auto empty = f.solver.feasible(res, 0, 0.0);
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(empty->empty());
}

TEST(KCenterExact, Line4) {
  Fixture f(testing::line4());
  const auto sol = f.solver.solve_exact(full_residual(f.inst), 2);
  EXPECT_DOUBLE_EQ(sol.radius, 1.0);
  EXPECT_EQ(sol.centers, (std::vector<int>{0, 2}));
  EXPECT_TRUE(sol.outliers.empty());
  EXPECT_EQ(sol.beta, 1.0);
}

TEST(KCenterExact, Color4WithOutliers) {
  Fixture f(testing::color4());
  const auto sol = f.solver.solve_exact(full_residual(f.inst), 1);
  EXPECT_DOUBLE_EQ(sol.radius, 1.0);
  EXPECT_EQ(sol.centers, (std::vector<int>{0}));
  EXPECT_EQ(sol.outliers, (std::vector<int>{2, 3}));
}

TEST(KCenterExact, SinglePoint) {
  Fixture f(testing::triv1());
  const auto sol = f.solver.solve_exact(full_residual(f.inst), 1);
  EXPECT_DOUBLE_EQ(sol.radius, 0.0);
}

TEST(KCenterExact, InfeasibleRequirementsThrow) {
  Fixture f(testing::color4());
  ResidualInstance res = full_residual(f.inst);
  res.required = {3, 0};  // only 2 class-A points exist
  EXPECT_THROW(f.solver.solve_exact(res, 1), InfeasibleInstanceError);
  ResidualInstance res2 = full_residual(f.inst);
  res2.required = {1, 0};
  EXPECT_THROW(f.solver.solve_exact(res2, 0), InfeasibleInstanceError);
}

TEST(KCenterExact, MinimalityWitness) {
  // The solution passes its own radius and fails the previous candidate.
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    Fixture f(testing::random_instance(rng, 9, 2, 1 + static_cast<int>(rng() % 3), 2));
    const ResidualInstance res = full_residual(f.inst);
    const int kappa = f.inst.k();
    const auto sol = f.solver.solve_exact(res, kappa);
    EXPECT_TRUE(f.solver.feasible(res, kappa, sol.radius).has_value());
    const auto& radii = candidate_radii(f.inst);
    const auto it = std::lower_bound(radii.begin(), radii.end(), sol.radius);
    ASSERT_TRUE(it != radii.end() && *it == sol.radius);
    if (it != radii.begin()) {
      EXPECT_FALSE(f.solver.feasible(res, kappa, *(it - 1)).has_value());
    }
  }
}

TEST(KCenterExact, RadiusAtMostLargestOracleRadius) {
  // The optimal sum-of-radii solution is k-center feasible at its largest
  // radius, so the exact k-center value never exceeds it.
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    Fixture f(testing::random_instance(rng, 8, 2, 1 + static_cast<int>(rng() % 3), 2));
    const auto oracle = solve_exact_sor(f.inst);
    const auto sol = f.solver.solve_exact(full_residual(f.inst), f.inst.k());
    EXPECT_LE(sol.radius, oracle.sorted_radii[0] + 1e-12);
  }
}

TEST(KCenterExact, ResidualRadiusBound) {
  // After removing the oracle's top-i balls, the residual (k-i)-center value
  // is at most twice the (i+1)-th oracle radius.
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    Fixture f(testing::random_instance(rng, 9, 2, 2 + static_cast<int>(rng() % 2), 2));
    const auto oracle = solve_exact_sor(f.inst);
    // The oracle's own balls in non-increasing radius order.
    std::vector<std::pair<double, int>> order;
    for (const Ball& b : oracle.solution.balls) order.emplace_back(-b.radius, b.center);
    std::sort(order.begin(), order.end());
    std::vector<Ball> top;
    for (std::size_t i = 0; i < order.size(); ++i) {
      top.push_back({order[i].second, -order[i].first, Slot::kCluster});
      if (static_cast<int>(i) + 1 >= f.inst.k()) break;
      const ResidualInstance res = residual_instance(f.inst, f.geom, top);
      const auto sol = f.solver.solve_exact(res, f.inst.k() - static_cast<int>(top.size()));
      EXPECT_LE(sol.radius, 2 * oracle.sorted_radii[i + 1] + 1e-9);
    }
  }
}

TEST(KCenterGreedy, Color4) {
  Fixture f(testing::color4());
  const auto sol = f.solver.solve_greedy(full_residual(f.inst), 1);
  EXPECT_DOUBLE_EQ(sol.radius, 1.0);
  EXPECT_EQ(sol.centers, (std::vector<int>{0}));
  EXPECT_FALSE(sol.beta.has_value());
}

TEST(KCenterGreedy, NothingRequired) {
  Fixture f(testing::color4());
  ResidualInstance res = full_residual(f.inst);
  res.required = {0, 0};
  const auto sol = f.solver.solve_greedy(res, 1);
  EXPECT_DOUBLE_EQ(sol.radius, 0.0);
  EXPECT_TRUE(sol.centers.empty());
}

TEST(KCenterGreedy, AlwaysFeasibleNoRatioContract) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    Fixture f(testing::random_instance(rng, 10, 3, 1 + static_cast<int>(rng() % 3), 3));
    const ResidualInstance res = full_residual(f.inst);
    const auto sol = f.solver.solve_greedy(res, f.inst.k());
    EXPECT_LE(static_cast<int>(sol.centers.size()), f.inst.k());
    // Covered within radius meets per-class requirements.
    std::vector<int> covered(f.inst.num_classes(), 0);
    for (int p = 0; p < f.inst.n(); ++p) {
      for (int c : sol.centers) {
        if (f.inst.distance(c, p) <= sol.radius) {
          ++covered[f.inst.class_of(p)];
          break;
        }
      }
    }
    for (int i = 0; i < f.inst.num_classes(); ++i) EXPECT_GE(covered[i], res.required[i]);
    // Outliers respect m'.
    std::vector<int> out_count(f.inst.num_classes(), 0);
    for (int p : sol.outliers) ++out_count[f.inst.class_of(p)];
    for (int i = 0; i < f.inst.num_classes(); ++i)
      EXPECT_LE(out_count[i], res.allowed_outliers(f.geom, i));
  }
}

TEST(KCenter, NodeBudgetIsAHardError) {
  KCenterOptions opts;
  opts.node_budget = 3;
  std::mt19937_64 rng(67);
  Fixture f(testing::random_instance(rng, 10, 2, 3, 1), opts);
  EXPECT_THROW(f.solver.solve_exact(full_residual(f.inst), f.inst.k()), NodeBudgetExceeded);
}

}  // namespace
}  // namespace sumradii
