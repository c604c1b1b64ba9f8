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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumradii/core.hpp"
#include "sumradii/kcenter.hpp"
#include "sumradii/profiles.hpp"
#include "sumradii/search_common.hpp"

namespace sumradii {

// Iterative covering, derandomized: for every radius profile (padded with one
// zero slot per allowed outlier), branch exhaustively over which slot the
// minimum-id uncovered point consumes. A cluster slot of guessed radius r
// places a ball of radius 2r; an outlier slot places a radius-0 outlier ball.
// Any uncovered point belongs to some optimal cluster or outlier set, so the
// branch matching the optimal roles always exists and yields cost at most
// twice the profile sum.

struct CoverSlot {
  double radius = 0;
  Slot slot = Slot::kCluster;

  friend bool operator==(const CoverSlot&, const CoverSlot&) = default;
};

struct CoverSearchNode {
  std::vector<CoverSlot> slots;    // remaining, cluster slots first by radius desc
  std::vector<Ball> balls;         // placed so far
  double cost = 0;                 // sum of placed cluster radii
  Bitset covered;                  // points inside any placed ball
  std::vector<int> still_required; // per class, cluster coverage still needed

  bool requirements_met() const {
    for (int r : still_required) {
      if (r > 0) return false;
    }
    return true;
  }
};

inline CoverSearchNode make_cover_root(const Instance& inst, const RadiusProfile& profile) {
  CoverSearchNode node;
  node.covered = Bitset(inst.n());
  node.still_required = inst.required();
  for (double r : profile.radii) node.slots.push_back({r, Slot::kCluster});
  for (int i = 0; i < inst.total_outlier_budget(); ++i) node.slots.push_back({0.0, Slot::kOutlier});
  return node;
}

// One branching step: children for every distinct (radius, slot) value in the
// remaining slots, cluster slots first in non-increasing radius order. Each
// child covers the minimum-id uncovered point. Returns no children when the
// node is terminal (requirements met), has no uncovered point, or no slots.
inline std::vector<CoverSearchNode> cover_children(const Instance& inst,
                                                   const detail::BallGeometry& geom,
                                                   const CoverSearchNode& node) {
  std::vector<CoverSearchNode> children;
  if (node.requirements_met()) return children;
  const int pick = node.covered.first_unset();
  if (pick < 0 || node.slots.empty()) return children;
  for (std::size_t s = 0; s < node.slots.size(); ++s) {
    if (s > 0 && node.slots[s] == node.slots[s - 1]) continue;  // value-deduplicated
    CoverSearchNode child = node;
    child.slots.erase(child.slots.begin() + s);
    const CoverSlot used = node.slots[s];
    Ball ball;
    ball.center = pick;
    if (used.slot == Slot::kCluster) {
      ball.radius = 2 * used.radius;
      ball.slot = Slot::kCluster;
      child.cost += ball.radius;
      const Bitset& members = geom.members(pick, ball.radius);
      members.for_each_set([&](int p) {
        if (!child.covered.test(p)) {
          child.covered.set(p);
          int& need = child.still_required[inst.class_of(p)];
          if (need > 0) --need;
        }
      });
    } else {
      ball.radius = 0;
      ball.slot = Slot::kOutlier;
      // Outlier balls remove the point (and co-located ones) from future
      // picks but contribute nothing toward coverage requirements.
      geom.members(pick, 0.0).for_each_set([&](int p) { child.covered.set(p); });
    }
    child.balls.push_back(ball);
    children.push_back(std::move(child));
  }
  return children;
}

struct CoverSearchOptions {
  double profile_cost_bound = std::numeric_limits<double>::infinity();  // 2 * sum of profile radii
  double bound_tolerance = 1e-9;
};

// Depth-first enumeration of terminal nodes below `node`, pruned against the
// profile cost bound and the incumbent. Terminal nodes are offered to `sink`.
template <typename Sink>
void branch_cover(const Instance& inst, const detail::BallGeometry& geom,
                  const CoverSearchNode& node, const CoverSearchOptions& opts,
                  detail::NodeCounter& nodes, const detail::Incumbent& incumbent, Sink&& sink) {
  if (node.cost > opts.profile_cost_bound + opts.bound_tolerance) return;
  if (node.cost > incumbent.bound() + opts.bound_tolerance) return;
  if (node.requirements_met()) {
    sink(node);
    return;
  }
  nodes.bump("iterative covering search");
  for (const CoverSearchNode& child : cover_children(inst, geom, node)) {
    branch_cover(inst, geom, child, opts, nodes, incumbent, sink);
  }
}

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t profiles = 0;
  double kcenter_seed_radius = 0;
  double internal_epsilon = 0;
};

struct Cover2Options {
  double epsilon = 1.0;
  std::uint64_t node_budget = 200'000'000;
  int jobs = 1;
  double bound_tolerance = 1e-9;
  std::optional<double> incumbent_bound;
};

struct SolveResult {
  Solution solution;
  SolveStats stats;
  std::optional<double> guarantee;  // cost <= guarantee * OPT, when claimed
};

inline SolveResult solve_cover2(const Instance& inst, const Cover2Options& opts = {}) {
  if (!(opts.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  detail::BallGeometry geom(inst);
  SolveResult result;
  result.guarantee = 2.0 + opts.epsilon;
  result.stats.internal_epsilon = detail::internal_epsilon(opts.epsilon, 2.0);

  const std::vector<int> rho = inst.required();
  const bool nothing_required = std::all_of(rho.begin(), rho.end(), [](int r) { return r <= 0; });
  if (nothing_required) {
    result.solution = make_solution(inst, {});
    return result;
  }

  // Profile enumeration is seeded with the exact colorful k-center value.
  KCenterSolver kcenter(inst, geom, {opts.node_budget});
  const double seed_radius = kcenter.solve_exact(full_residual(inst), inst.k()).radius;
  result.stats.kcenter_seed_radius = seed_radius;

  std::vector<RadiusProfile> profiles =
      enumerate_profiles(seed_radius, 1.0, inst.k(), result.stats.internal_epsilon);
  result.stats.profiles = profiles.size();

  // Cheap-profile-first processing tightens the incumbent early; the final
  // answer is order-independent.
  std::vector<std::size_t> order(profiles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double sa = profiles[a].sum();
    const double sb = profiles[b].sum();
    if (sa != sb) return sa < sb;
    return profiles[a].radii < profiles[b].radii;
  });

  detail::Incumbent incumbent(opts.incumbent_bound.value_or(std::numeric_limits<double>::infinity()));
  detail::NodeCounter nodes(opts.node_budget);
  detail::parallel_for_index(opts.jobs, order.size(), [&](std::size_t i) {
    const RadiusProfile& profile = profiles[order[i]];
    CoverSearchOptions search_opts;
    search_opts.profile_cost_bound = 2.0 * profile.sum();
    search_opts.bound_tolerance = opts.bound_tolerance;
    CoverSearchNode root = make_cover_root(inst, profile);
    branch_cover(inst, geom, root, search_opts, nodes, incumbent,
                 [&](const CoverSearchNode& terminal) { incumbent.offer(terminal.balls); });
  });
  result.stats.nodes = nodes.used() + kcenter.nodes_explored();

  if (!incumbent.has_best())
    throw InfeasibleInstanceError("iterative covering search found no feasible solution");
  result.solution = make_solution(inst, incumbent.best_balls());
  return result;
}

}  // namespace sumradii
