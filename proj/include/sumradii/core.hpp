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
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sumradii/bitset.hpp"

namespace sumradii {

// Raised when no feasible solution exists for the given instance/parameters.
struct InfeasibleInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an exponential search exceeds its configured node budget.
// Never downgraded to a silent fallback.
struct NodeBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when the brute-force oracle is asked to exceed its size caps.
struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class MetricKind { kEuclidean, kExplicit };

enum class Slot { kCluster, kOutlier };

struct PointRecord {
  int class_id = 0;
  std::vector<double> coords;  // empty for explicit metrics without geometry
};

struct ValidationOptions {
  bool check_triangle = true;
  // Relative slack for the triangle check; admits matrices derived from
  // floating-point coordinates, where rounding can violate the inequality
  // by a few ulps on collinear configurations.
  double triangle_slack = 1e-12;
};

// A colorful clustering instance: points with class labels, a metric,
// a cluster budget k, and per-class outlier budgets.
//
// Immutable after construction; all accessors are pure reads and safe for
// unrestricted concurrent use.
class Instance {
 public:
  static Instance from_coords(std::vector<PointRecord> points, int k, std::vector<int> budgets,
                              const ValidationOptions& opts = {}) {
    return Instance(MetricKind::kEuclidean, std::move(points), {}, k, std::move(budgets), opts);
  }

  static Instance from_matrix(std::vector<PointRecord> points, std::vector<std::vector<double>> matrix,
                              int k, std::vector<int> budgets, const ValidationOptions& opts = {}) {
    return Instance(MetricKind::kExplicit, std::move(points), std::move(matrix), k,
                    std::move(budgets), opts);
  }

  Instance(MetricKind kind, std::vector<PointRecord> points, std::vector<std::vector<double>> matrix,
           int k, std::vector<int> budgets, const ValidationOptions& opts = {})
      : kind_(kind), points_(std::move(points)), k_(k), budgets_(std::move(budgets)) {
    const int n = static_cast<int>(points_.size());
    if (n == 0) throw std::invalid_argument("instance has no points");
    const int omega = static_cast<int>(budgets_.size());
    if (omega == 0) throw std::invalid_argument("instance has no classes (empty budget vector)");
    class_sizes_.assign(omega, 0);
    for (const auto& p : points_) {
      if (p.class_id < 0 || p.class_id >= omega)
        throw std::invalid_argument("point class_id out of range [0, omega)");
      ++class_sizes_[p.class_id];
    }
    if (k_ < 1 || k_ > n) throw std::invalid_argument("k must satisfy 1 <= k <= n");
    for (int i = 0; i < omega; ++i) {
      if (budgets_[i] < 0 || budgets_[i] > class_sizes_[i])
        throw std::invalid_argument("outlier budget must satisfy 0 <= m_i <= n_i");
    }

    dist_.assign(static_cast<std::size_t>(n) * n, 0.0);
    if (kind_ == MetricKind::kEuclidean) {
      const std::size_t dim = points_[0].coords.size();
      if (dim == 0) throw std::invalid_argument("euclidean instance requires coordinates");
      for (const auto& p : points_) {
        if (p.coords.size() != dim)
          throw std::invalid_argument("all points must share the same dimension");
      }
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          double s = 0;
          for (std::size_t d = 0; d < dim; ++d) {
            const double diff = points_[a].coords[d] - points_[b].coords[d];
            s += diff * diff;
          }
          const double dd = std::sqrt(s);
          at(a, b) = dd;
          at(b, a) = dd;
        }
      }
    } else {
      if (static_cast<int>(matrix.size()) != n)
        throw std::invalid_argument("explicit metric matrix must be n x n");
      for (int a = 0; a < n; ++a) {
        if (static_cast<int>(matrix[a].size()) != n)
          throw std::invalid_argument("explicit metric matrix must be n x n");
        for (int b = 0; b < n; ++b) at(a, b) = matrix[a][b];
      }
      for (int a = 0; a < n; ++a) {
        if (at(a, a) != 0.0) throw std::invalid_argument("metric diagonal must be zero");
        for (int b = 0; b < n; ++b) {
          if (!(at(a, b) >= 0.0)) throw std::invalid_argument("metric must be nonnegative");
          if (at(a, b) != at(b, a)) throw std::invalid_argument("metric must be symmetric");
        }
      }
      if (opts.check_triangle) {
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
              const double via = at(a, b) + at(b, c);
              if (at(a, c) > via + opts.triangle_slack * (1.0 + via))
                throw std::invalid_argument("explicit metric violates the triangle inequality");
            }
          }
        }
      }
    }
  }

  int n() const { return static_cast<int>(points_.size()); }
  int num_classes() const { return static_cast<int>(budgets_.size()); }
  int k() const { return k_; }
  MetricKind metric() const { return kind_; }

  const std::vector<PointRecord>& points() const { return points_; }
  int class_of(int p) const { return points_[check_id(p)].class_id; }
  int class_size(int c) const { return class_sizes_.at(c); }
  const std::vector<int>& class_sizes() const { return class_sizes_; }
  const std::vector<int>& outlier_budgets() const { return budgets_; }
  int outlier_budget(int c) const { return budgets_.at(c); }
  int total_outlier_budget() const {
    int s = 0;
    for (int b : budgets_) s += b;
    return s;
  }

  double distance(int a, int b) const { return dist_[check_id(a) * static_cast<std::size_t>(n()) + check_id(b)]; }

  double max_distance() const {
    double m = 0;
    for (double d : dist_) m = std::max(m, d);
    return m;
  }

  // Per-class minimum number of points any feasible solution must cover.
  std::vector<int> required() const {
    std::vector<int> rho(budgets_.size());
    for (std::size_t i = 0; i < budgets_.size(); ++i) rho[i] = class_sizes_[i] - budgets_[i];
    return rho;
  }

 private:
  double& at(int a, int b) { return dist_[a * static_cast<std::size_t>(points_.size()) + b]; }

  std::size_t check_id(int p) const {
    if (p < 0 || p >= n()) throw std::out_of_range("point id out of range");
    return static_cast<std::size_t>(p);
  }

  MetricKind kind_;
  std::vector<PointRecord> points_;
  int k_;
  std::vector<int> budgets_;
  std::vector<int> class_sizes_;
  std::vector<double> dist_;
};

// A ball in a candidate solution. Outlier-slot balls always have radius zero;
// a radius-0 cluster ball is legal (singleton clusters exist).
struct Ball {
  int center = 0;
  double radius = 0;
  Slot slot = Slot::kCluster;
};

inline void validate_ball(const Instance& inst, const Ball& b) {
  if (b.center < 0 || b.center >= inst.n()) throw std::out_of_range("ball center id out of range");
  if (!(b.radius >= 0)) throw std::invalid_argument("ball radius must be nonnegative");
  if (b.slot == Slot::kOutlier && b.radius != 0)
    throw std::invalid_argument("outlier-slot balls must have radius zero");
}

// Membership uses <= with exact comparison on the stored reals.
inline std::vector<int> ball_members(const Instance& inst, int center, double radius) {
  if (!(radius >= 0)) throw std::invalid_argument("ball radius must be nonnegative");
  std::vector<int> out;
  for (int p = 0; p < inst.n(); ++p) {
    if (inst.distance(center, p) <= radius) out.push_back(p);
  }
  return out;
}

struct ResidualRequirements {
  std::vector<int> rho;

  bool all_met() const {
    for (int r : rho) {
      if (r > 0) return false;
    }
    return true;
  }

  friend bool operator==(const ResidualRequirements&, const ResidualRequirements&) = default;
};

// Number of class-i points still required to be covered after removing
// everything inside the given balls: rho'_i = max(0, rho_i - covered_i).
// A point inside several balls is counted once.
inline ResidualRequirements counting(const Instance& inst, std::span<const Ball> balls,
                                     const ResidualRequirements& rho) {
  const int omega = inst.num_classes();
  if (static_cast<int>(rho.rho.size()) != omega)
    throw std::invalid_argument("requirement vector size must equal the number of classes");
  for (int i = 0; i < omega; ++i) {
    if (rho.rho[i] < 0 || rho.rho[i] > inst.class_size(i))
      throw std::invalid_argument("requirements must satisfy 0 <= rho_i <= n_i");
  }
  Bitset covered(inst.n());
  for (const Ball& b : balls) {
    validate_ball(inst, b);
    for (int p : ball_members(inst, b.center, b.radius)) covered.set(p);
  }
  ResidualRequirements out{std::vector<int>(omega, 0)};
  std::vector<int> covered_per_class(omega, 0);
  covered.for_each_set([&](int p) { ++covered_per_class[inst.class_of(p)]; });
  for (int i = 0; i < omega; ++i) out.rho[i] = std::max(0, rho.rho[i] - covered_per_class[i]);
  return out;
}

// A candidate solution: balls plus derived coverage statistics.
struct Solution {
  std::vector<Ball> balls;
  double cost = 0;                // sum of cluster-slot radii, left-to-right
  std::vector<int> covered;       // per class, points inside >= 1 cluster ball
  std::vector<int> outliers;      // per class, points inside no cluster ball
};

struct FeasibilityReport {
  bool feasible = false;
  double cost = 0;
  int cluster_balls = 0;
  std::vector<int> covered;
  std::vector<int> outliers;
};

// Recomputes cost and coverage from scratch and reports the verdict:
// feasible iff (cluster-ball count <= k) and (uncovered_i <= m_i for all i),
// where uncovered means "in no cluster-slot ball". Infeasible is a verdict,
// not an error.
inline FeasibilityReport verify_balls(const Instance& inst, std::span<const Ball> balls) {
  const int omega = inst.num_classes();
  FeasibilityReport rep;
  rep.covered.assign(omega, 0);
  rep.outliers.assign(omega, 0);
  Bitset covered(inst.n());
  for (const Ball& b : balls) {
    validate_ball(inst, b);
    if (b.slot != Slot::kCluster) continue;
    rep.cost += b.radius;
    ++rep.cluster_balls;
    for (int p : ball_members(inst, b.center, b.radius)) covered.set(p);
  }
  covered.for_each_set([&](int p) { ++rep.covered[inst.class_of(p)]; });
  rep.feasible = rep.cluster_balls <= inst.k();
  for (int i = 0; i < omega; ++i) {
    rep.outliers[i] = inst.class_size(i) - rep.covered[i];
    if (rep.outliers[i] > inst.outlier_budget(i)) rep.feasible = false;
  }
  return rep;
}

inline FeasibilityReport verify_solution(const Instance& inst, const Solution& sol) {
  return verify_balls(inst, sol.balls);
}

inline Solution make_solution(const Instance& inst, std::vector<Ball> balls) {
  FeasibilityReport rep = verify_balls(inst, balls);
  Solution sol;
  sol.balls = std::move(balls);
  sol.cost = rep.cost;
  sol.covered = std::move(rep.covered);
  sol.outliers = std::move(rep.outliers);
  return sol;
}

// {0} plus all pairwise distances, sorted and deduplicated. Any optimal ball
// radius equals some center-to-point distance or zero, so searches over this
// set are exhaustive.
inline std::vector<double> candidate_radii(const Instance& inst) {
  std::vector<double> out;
  out.push_back(0.0);
  for (int a = 0; a < inst.n(); ++a) {
    for (int b = a + 1; b < inst.n(); ++b) out.push_back(inst.distance(a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// Per-instance precomputed ball membership masks: for each center, points
// sorted by distance with prefix masks, so members(c, r) is an upper_bound
// plus a table lookup.
class BallGeometry {
 public:
  explicit BallGeometry(const Instance& inst) : inst_(&inst) {
    const int n = inst.n();
    const int omega = inst.num_classes();
    class_masks_.assign(omega, Bitset(n));
    for (int p = 0; p < n; ++p) class_masks_[inst.class_of(p)].set(p);
    dists_.resize(n);
    prefixes_.resize(n);
    for (int c = 0; c < n; ++c) {
      std::vector<std::pair<double, int>> order;
      order.reserve(n);
      for (int p = 0; p < n; ++p) order.emplace_back(inst.distance(c, p), p);
      std::sort(order.begin(), order.end());
      dists_[c].reserve(n);
      prefixes_[c].reserve(n + 1);
      Bitset acc(n);
      prefixes_[c].push_back(acc);
      for (const auto& [d, p] : order) {
        dists_[c].push_back(d);
        acc.set(p);
        prefixes_[c].push_back(acc);
      }
    }
    radii_ = candidate_radii(inst);
  }

  const Instance& instance() const { return *inst_; }

  // Mask of {p : d(center, p) <= radius}.
  const Bitset& members(int center, double radius) const {
    const auto& ds = dists_[center];
    const auto idx = std::upper_bound(ds.begin(), ds.end(), radius) - ds.begin();
    return prefixes_[center][idx];
  }

  const Bitset& class_mask(int c) const { return class_masks_[c]; }
  const std::vector<double>& sorted_candidate_radii() const { return radii_; }
  const std::vector<double>& sorted_distances(int center) const { return dists_[center]; }

 private:
  const Instance* inst_;
  std::vector<Bitset> class_masks_;
  std::vector<std::vector<double>> dists_;
  std::vector<std::vector<Bitset>> prefixes_;
  std::vector<double> radii_;
};

}  // namespace detail

}  // namespace sumradii
