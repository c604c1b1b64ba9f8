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
#include <span>
#include <unordered_map>
#include <vector>

#include "sumradii/core.hpp"
#include "sumradii/cover2.hpp"
#include "sumradii/kcenter.hpp"
#include "sumradii/profiles.hpp"
#include "sumradii/search_common.hpp"

namespace sumradii {

// Colorful-k-center-guided covering: per radius profile, one cluster guess is
// resolved per iteration. The i-th guess decides where the i-th largest
// optimal cluster's center landed - inside an existing ball, near a fresh
// k-center center, or on a k-center outlier - and the chosen ball is inflated
// by (2*beta+1) times the profile radius so that the whole cluster fits. With
// a beta-approximate subroutine the best branch costs at most
// (2*beta+1+eps) * OPT; the exact subroutine gives beta = 1.

// The residual k-center at iteration i (i-1 balls placed) keeps a center
// budget of k-i+1: that is how many optimal clusters can still have leftover
// points, and the bound 2*r_i on the residual radius needs one center per
// such cluster.

inline ResidualInstance residual_instance(const Instance& inst, const detail::BallGeometry& geom,
                                          std::span<const Ball> balls) {
  ResidualInstance res;
  res.base = &inst;
  Bitset covered(inst.n());
  for (const Ball& b : balls) {
    validate_ball(inst, b);
    covered |= geom.members(b.center, b.radius);
  }
  res.alive = Bitset::all(inst.n());
  std::vector<int> rho = inst.required();
  covered.for_each_set([&](int p) {
    res.alive.reset(p);
    int& need = rho[inst.class_of(p)];
    if (need > 0) --need;
  });
  res.required = std::move(rho);
  return res;
}

inline ResidualInstance residual_instance(const Instance& inst, std::span<const Ball> balls) {
  detail::BallGeometry geom(inst);
  return residual_instance(inst, geom, balls);
}

struct GuessChoice {
  enum class Kind { kExisting, kNew, kOutlier };
  Kind kind = Kind::kNew;
  // Ball index for kExisting; point id for kNew / kOutlier.
  int value = 0;

  friend bool operator==(const GuessChoice&, const GuessChoice&) = default;
};

struct SorSearchNode {
  std::vector<Ball> balls;           // all cluster-slot, one per iteration
  std::vector<GuessChoice> origins;  // parallel to balls
  int iteration = 0;
  double cost = 0;
  Bitset covered;
  std::vector<int> still_required;  // rho' w.r.t. the placed balls

  bool requirements_met() const {
    for (int r : still_required) {
      if (r > 0) return false;
    }
    return true;
  }
};

inline SorSearchNode make_sor_root(const Instance& inst) {
  SorSearchNode node;
  node.covered = Bitset(inst.n());
  node.still_required = inst.required();
  return node;
}

// Applies one guess. kExisting(j) extends ball j by (2*beta+1)*profile_radius
// and places a radius-0 dummy ball on the minimum-id uncovered point (the
// dummy only consumes the iteration's ball slot; any uncovered point works,
// so the choice is made deterministic). If nothing is uncovered after the
// extension the dummy is skipped and the node comes back terminal.
// kNew/kOutlier place a ball of radius (2*beta+1)*profile_radius on the
// chosen k-center center resp. outlier point.
inline SorSearchNode expand_guess(const Instance& inst, const detail::BallGeometry& geom,
                                  const SorSearchNode& node, const GuessChoice& choice,
                                  double profile_radius, double beta, const KCenterSolution& kc) {
  const double inflation = (2 * beta + 1) * profile_radius;
  SorSearchNode child = node;
  child.iteration = node.iteration + 1;
  child.cost = node.cost + inflation;
  auto absorb = [&](const Bitset& members) {
    members.for_each_set([&](int p) {
      if (!child.covered.test(p)) {
        child.covered.set(p);
        int& need = child.still_required[inst.class_of(p)];
        if (need > 0) --need;
      }
    });
  };
  switch (choice.kind) {
    case GuessChoice::Kind::kExisting: {
      if (choice.value < 0 || choice.value >= static_cast<int>(node.balls.size()))
        throw std::invalid_argument("existing-ball guess index out of range");
      Ball& grown = child.balls[choice.value];
      grown.radius += inflation;
      absorb(geom.members(grown.center, grown.radius));
      const int dummy = child.covered.first_unset();
      if (dummy >= 0) {
        child.balls.push_back({dummy, 0.0, Slot::kCluster});
        child.origins.push_back(choice);
        absorb(geom.members(dummy, 0.0));
      }
      return child;
    }
    case GuessChoice::Kind::kNew: {
      if (std::find(kc.centers.begin(), kc.centers.end(), choice.value) == kc.centers.end())
        throw std::invalid_argument("new-center guess must name a k-center center");
      break;
    }
    case GuessChoice::Kind::kOutlier: {
      if (std::find(kc.outliers.begin(), kc.outliers.end(), choice.value) == kc.outliers.end())
        throw std::invalid_argument("outlier guess must name a k-center outlier");
      break;
    }
  }
  child.balls.push_back({choice.value, inflation, Slot::kCluster});
  child.origins.push_back(choice);
  absorb(geom.members(choice.value, inflation));
  return child;
}

// All guesses branched at a node: every existing ball, every subroutine
// center, and every subroutine outlier (co-located outliers deduplicated,
// since their balls are identical point sets). At most k + m children.
inline std::vector<GuessChoice> sor_branch_choices(const Instance& inst, const SorSearchNode& node,
                                                   const KCenterSolution& kc) {
  std::vector<GuessChoice> out;
  for (int j = 0; j < static_cast<int>(node.balls.size()); ++j)
    out.push_back({GuessChoice::Kind::kExisting, j});
  for (int c : kc.centers) out.push_back({GuessChoice::Kind::kNew, c});
  std::vector<int> outliers = kc.outliers;
  std::sort(outliers.begin(), outliers.end());
  std::vector<int> kept;
  for (int o : outliers) {
    bool dup = false;
    for (int prev : kept) {
      if (inst.distance(prev, o) == 0) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(o);
  }
  for (int o : kept) out.push_back({GuessChoice::Kind::kOutlier, o});
  return out;
}

enum class KCenterMode { kExact, kGreedy };

struct Sor7Options {
  double epsilon = 1.0;
  KCenterMode kcenter = KCenterMode::kExact;
  std::uint64_t node_budget = 200'000'000;
  int jobs = 1;
  double bound_tolerance = 1e-9;
  std::optional<double> incumbent_bound;
};

namespace detail {

// Memoizes subroutine calls by (alive set, kappa): across profiles and
// branches the same residual recurs constantly, and the solution only
// depends on the residual.
class ColCenCache {
 public:
  ColCenCache(const KCenterSolver& solver, KCenterMode mode) : solver_(&solver), mode_(mode) {}

  KCenterSolution solve(const ResidualInstance& res, int kappa) {
    Key key{hash_words(res.alive.words(), static_cast<std::uint64_t>(kappa)), kappa,
            res.alive.words()};
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    KCenterSolution sol = mode_ == KCenterMode::kExact ? solver_->solve_exact(res, kappa)
                                                       : solver_->solve_greedy(res, kappa);
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(std::move(key), sol);
    return sol;
  }

 private:
  struct Key {
    std::uint64_t hash;
    int kappa;
    std::vector<std::uint64_t> words;

    friend bool operator==(const Key& a, const Key& b) {
      return a.hash == b.hash && a.kappa == b.kappa && a.words == b.words;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return static_cast<std::size_t>(k.hash); }
  };

  const KCenterSolver* solver_;
  KCenterMode mode_;
  std::mutex mutex_;
  std::unordered_map<Key, KCenterSolution, KeyHash> cache_;
};

}  // namespace detail

inline SolveResult solve_sor7(const Instance& inst, const Sor7Options& opts = {}) {
  if (!(opts.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  const double beta = 1.0;  // both subroutines plug in here; only exact certifies beta = 1
  const double ratio_gap = 2 * beta + 1;

  detail::BallGeometry geom(inst);
  SolveResult result;
  result.guarantee = opts.kcenter == KCenterMode::kExact
                         ? std::optional<double>(ratio_gap + opts.epsilon)
                         : std::nullopt;
  result.stats.internal_epsilon = detail::internal_epsilon(opts.epsilon, ratio_gap);

  const std::vector<int> rho = inst.required();
  if (std::all_of(rho.begin(), rho.end(), [](int r) { return r <= 0; })) {
    result.solution = make_solution(inst, {});
    return result;
  }

  KCenterSolver kcenter(inst, geom, {opts.node_budget});
  detail::ColCenCache colcen(kcenter, opts.kcenter);
  const double seed_radius = colcen.solve(full_residual(inst), inst.k()).radius;
  result.stats.kcenter_seed_radius = seed_radius;

  std::vector<RadiusProfile> profiles =
      enumerate_profiles(seed_radius, beta, inst.k(), result.stats.internal_epsilon);
  result.stats.profiles = profiles.size();

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

  struct Frame {
    const Instance& inst;
    const detail::BallGeometry& geom;
    const RadiusProfile& profile;
    detail::ColCenCache& colcen;
    detail::Incumbent& incumbent;
    detail::NodeCounter& nodes;
    double beta;
    double tol;

    void dfs(const SorSearchNode& node) {
      if (node.requirements_met()) {
        incumbent.offer(node.balls);
        return;
      }
      if (node.iteration >= inst.k()) return;
      const double next_cost = node.cost + (2 * beta + 1) * profile.radii[node.iteration];
      if (next_cost > incumbent.bound() + tol) return;
      nodes.bump("k-center guided covering search");
      ResidualInstance res;
      res.base = &inst;
      res.alive = Bitset::all(inst.n());
      node.covered.for_each_set([&](int p) { res.alive.reset(p); });
      res.required = node.still_required;
      const int kappa = inst.k() - node.iteration;
      const KCenterSolution kc = colcen.solve(res, kappa);
      for (const GuessChoice& choice : sor_branch_choices(inst, node, kc)) {
        dfs(expand_guess(inst, geom, node, choice, profile.radii[node.iteration], beta, kc));
      }
    }
  };

  detail::parallel_for_index(opts.jobs, order.size(), [&](std::size_t i) {
    Frame frame{inst,     geom,  profiles[order[i]],  colcen,
                incumbent, nodes, beta, opts.bound_tolerance};
    frame.dfs(make_sor_root(inst));
  });
  result.stats.nodes = nodes.used() + kcenter.nodes_explored();

  if (!incumbent.has_best())
    throw InfeasibleInstanceError("k-center guided covering found no feasible solution");
  result.solution = make_solution(inst, incumbent.best_balls());
  return result;
}

}  // namespace sumradii
