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

#include <algorithm>
#include <functional>
#include <limits>
#include <vector>

#include "sumradii/core.hpp"

namespace sumradii {

struct OracleCaps {
  int max_n = 14;
  int max_k = 4;
};

struct OracleResult {
  double opt_cost = 0;
  Solution solution;
  // Ball radii sorted non-increasing, zero-padded to length k.
  std::vector<double> sorted_radii;
  // Cluster point sets, parallel to sorted_radii (empty sets for padding).
  std::vector<std::vector<int>> clusters;
};

namespace detail {

struct OracleBest {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<double> radii_desc;
  std::vector<int> centers;
  std::vector<Ball> balls;
  bool found = false;

  void offer(double cost_in, const std::vector<int>& centers_in,
             const std::vector<double>& radii_in) {
    std::vector<double> desc = radii_in;
    std::sort(desc.begin(), desc.end(), std::greater<>());
    const bool better =
        !found || cost_in < cost ||
        (cost_in == cost &&
         (desc < radii_desc || (desc == radii_desc && centers_in < centers)));
    if (!better) return;
    found = true;
    cost = cost_in;
    radii_desc = std::move(desc);
    centers = centers_in;
    balls.clear();
    for (std::size_t i = 0; i < centers_in.size(); ++i)
      balls.push_back({centers_in[i], radii_in[i], Slot::kCluster});
  }
};

// Min-cost radius assignment for a fixed center set, branch-and-bound over
// each center's candidate radii in ascending order. Prunes on the partial sum
// and on an optimistic-coverage check with the still-affordable radius.
class OracleAssignSearch {
 public:
  OracleAssignSearch(const Instance& inst, const BallGeometry& geom, const std::vector<int>& rho,
                     OracleBest& best)
      : inst_(inst), geom_(geom), rho_(rho), best_(best) {}

  void run(const std::vector<int>& centers) {
    centers_ = &centers;
    radii_.assign(centers.size(), 0.0);
    dfs(0, 0.0, Bitset(inst_.n()));
  }

 private:
  bool coverage_ok(const Bitset& covered) const {
    for (int i = 0; i < inst_.num_classes(); ++i) {
      if (count_and(covered, geom_.class_mask(i)) < rho_[i]) return false;
    }
    return true;
  }

  bool optimistic_ok(std::size_t next, double cost_so_far, const Bitset& covered) const {
    Bitset opt = covered;
    const double affordable = best_.found ? best_.cost - cost_so_far
                                          : std::numeric_limits<double>::infinity();
    for (std::size_t i = next; i < centers_->size(); ++i)
      opt |= geom_.members((*centers_)[i], affordable);
    return coverage_ok(opt);
  }

  void dfs(std::size_t idx, double cost_so_far, const Bitset& covered) {
    if (best_.found && cost_so_far > best_.cost) return;
    if (idx == centers_->size()) {
      if (coverage_ok(covered)) best_.offer(cost_so_far, *centers_, radii_);
      return;
    }
    if (!optimistic_ok(idx, cost_so_far, covered)) return;
    const int c = (*centers_)[idx];
    double prev = -1;
    for (double r : geom_.sorted_distances(c)) {
      if (r == prev) continue;
      prev = r;
      const double cost = cost_so_far + r;
      if (best_.found && cost > best_.cost) break;
      radii_[idx] = r;
      Bitset next_cov = covered;
      next_cov |= geom_.members(c, r);
      dfs(idx + 1, cost, next_cov);
    }
  }

  const Instance& inst_;
  const BallGeometry& geom_;
  const std::vector<int>& rho_;
  OracleBest& best_;
  const std::vector<int>* centers_ = nullptr;
  std::vector<double> radii_;
};

}  // namespace detail

// Exhaustive minimum over center subsets of size <= k and radius assignments
// from the candidate set. Ties broken by lexicographically smaller
// (non-increasing radii, sorted center ids). Refuses instances above the
// caps rather than approximating.
inline OracleResult solve_exact_sor(const Instance& inst, const OracleCaps& caps = {}) {
  if (inst.n() > caps.max_n)
    throw OracleCapExceeded("oracle refuses n > " + std::to_string(caps.max_n));
  if (inst.k() > caps.max_k)
    throw OracleCapExceeded("oracle refuses k > " + std::to_string(caps.max_k));

  detail::BallGeometry geom(inst);
  const std::vector<int> rho = inst.required();
  detail::OracleBest best;

  const bool nothing_required = std::all_of(rho.begin(), rho.end(), [](int r) { return r <= 0; });
  if (nothing_required) {
    best.offer(0.0, {}, {});
  } else {
    detail::OracleAssignSearch search(inst, geom, rho, best);
    std::vector<int> centers;
    auto enumerate = [&](auto&& self, int start) -> void {
      if (!centers.empty()) search.run(centers);
      if (static_cast<int>(centers.size()) == inst.k()) return;
      for (int c = start; c < inst.n(); ++c) {
        centers.push_back(c);
        self(self, c + 1);
        centers.pop_back();
      }
    };
    enumerate(enumerate, 0);
    if (!best.found) throw InfeasibleInstanceError("oracle found no feasible configuration");
  }

  OracleResult result;
  result.opt_cost = best.cost;
  result.solution = make_solution(inst, best.balls);

  // Order clusters by (radius desc, center asc); assign each covered point to
  // its nearest covering ball, ties to the earlier ball in that order.
  std::vector<std::size_t> order(best.balls.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (best.balls[a].radius != best.balls[b].radius)
      return best.balls[a].radius > best.balls[b].radius;
    return best.balls[a].center < best.balls[b].center;
  });
  result.sorted_radii.assign(inst.k(), 0.0);
  result.clusters.assign(inst.k(), {});
  for (std::size_t i = 0; i < order.size(); ++i)
    result.sorted_radii[i] = best.balls[order[i]].radius;
  for (int p = 0; p < inst.n(); ++p) {
    int assigned = -1;
    double assigned_dist = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Ball& b = best.balls[order[i]];
      const double d = inst.distance(b.center, p);
      if (d <= b.radius && (assigned < 0 || d < assigned_dist)) {
        assigned = static_cast<int>(i);
        assigned_dist = d;
      }
    }
    if (assigned >= 0) result.clusters[assigned].push_back(p);
  }
  return result;
}

// Independent cross-check: enumerates assignment functions
// P -> {cluster 1..k, outlier} directly; a cluster's radius is the best
// max-distance over centers inside it. Returns the optimal cost. Capped at
// n <= 8 (it is the slow oracle).
inline double assignment_oracle_cost(const Instance& inst) {
  const int n = inst.n();
  if (n > 8) throw OracleCapExceeded("assignment oracle refuses n > 8");
  const int k = inst.k();
  const int omega = inst.num_classes();
  std::vector<int> assign(n, 0);  // 0..k-1 cluster, k outlier
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> outlier_count(omega);
  std::vector<std::vector<int>> members(k);
  for (;;) {
    std::fill(outlier_count.begin(), outlier_count.end(), 0);
    for (auto& m : members) m.clear();
    for (int p = 0; p < n; ++p) {
      if (assign[p] == k) {
        ++outlier_count[inst.class_of(p)];
      } else {
        members[assign[p]].push_back(p);
      }
    }
    bool ok = true;
    for (int i = 0; i < omega; ++i) {
      if (outlier_count[i] > inst.outlier_budget(i)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      double cost = 0;
      for (int j = 0; j < k && ok; ++j) {
        if (members[j].empty()) continue;
        double radius = std::numeric_limits<double>::infinity();
        for (int c : members[j]) {
          double worst = 0;
          for (int p : members[j]) worst = std::max(worst, inst.distance(c, p));
          radius = std::min(radius, worst);
        }
        cost += radius;
        if (cost >= best) ok = false;
      }
      if (ok) best = std::min(best, cost);
    }
    int pos = n - 1;
    while (pos >= 0 && assign[pos] == k) {
      assign[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++assign[pos];
  }
  return best;
}

struct RatioReport {
  bool feasible = false;
  double cost = 0;
  double opt = 0;
  double ratio = 0;
  double bound = 0;
  bool pass = false;
};

// Asserts sol is feasible and cost(sol) <= bound * OPT + tolerance.
// A violation is a failing verdict, not an error.
inline RatioReport verify_ratio(const Instance& inst, const Solution& sol, double bound,
                                const OracleCaps& caps = {}, double tolerance = 1e-9) {
  RatioReport report;
  report.bound = bound;
  const FeasibilityReport feas = verify_solution(inst, sol);
  report.feasible = feas.feasible;
  report.cost = feas.cost;
  const OracleResult oracle = solve_exact_sor(inst, caps);
  report.opt = oracle.opt_cost;
  if (report.opt > 0) {
    report.ratio = report.cost / report.opt;
  } else {
    report.ratio = report.cost <= tolerance ? 1.0 : std::numeric_limits<double>::infinity();
  }
  report.pass = report.feasible && report.cost <= bound * report.opt + tolerance;
  return report;
}

}  // namespace sumradii
