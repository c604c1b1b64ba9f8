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

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sumradii/core.hpp"

namespace sumradii {

// The still-uncovered part of an instance: alive points plus per-class
// coverage requirements. Candidate centers are restricted to alive points.
struct ResidualInstance {
  const Instance* base = nullptr;
  Bitset alive;
  std::vector<int> required;  // rho'_i, per class

  int alive_count(const detail::BallGeometry& geom, int cls) const {
    return count_and(alive, geom.class_mask(cls));
  }

  // Per-class outlier allowance m'_i = n'_i - rho'_i.
  int allowed_outliers(const detail::BallGeometry& geom, int cls) const {
    return alive_count(geom, cls) - required[cls];
  }

  bool nothing_required() const {
    for (int r : required) {
      if (r > 0) return false;
    }
    return true;
  }
};

inline ResidualInstance full_residual(const Instance& inst) {
  return ResidualInstance{&inst, Bitset::all(inst.n()), inst.required()};
}

// Output contract of the colorful k-center subroutine: at most kappa centers,
// a uniform radius, the alive points left uncovered at that radius, and the
// guarantee factor of the producing solver (1 for exact, absent for greedy).
struct KCenterSolution {
  std::vector<int> centers;
  double radius = 0;
  std::vector<int> outliers;
  std::optional<double> beta;
};

struct KCenterOptions {
  std::uint64_t node_budget = 200'000'000;
};

// Exact and greedy colorful k-center on residual instances. One solver is
// built per instance; exact results are memoized by (alive set, requirements,
// kappa) since iterative callers revisit the same residuals many times.
// Thread-safe: the memo is the only shared mutable state.
class KCenterSolver {
 public:
  KCenterSolver(const Instance& inst, const detail::BallGeometry& geom, KCenterOptions opts = {})
      : inst_(&inst), geom_(&geom), opts_(opts) {}

  std::uint64_t nodes_explored() const { return nodes_.load(std::memory_order_relaxed); }

  // Decision version: a center set of size <= kappa covering, for every
  // class i, at least required_i class-i alive points within `radius`, or
  // nullopt. Returns the lexicographically smallest feasible center set
  // (by sorted id, shorter prefixes first).
  std::optional<std::vector<int>> feasible(const ResidualInstance& res, int kappa,
                                           double radius) const {
    if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
    if (!(radius >= 0)) throw std::invalid_argument("radius must be nonnegative");
    FeasSearch search(*this, res, kappa, radius);
    return search.run();
  }

  // Minimum-radius exact solution (beta = 1): binary search over the global
  // candidate radius list for the smallest feasible value.
  KCenterSolution solve_exact(const ResidualInstance& res, int kappa) const {
    check_solvable(res, kappa);
    MemoKey key{hash_residual(res, kappa), kappa, res.alive.words(), res.required};
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    const auto& radii = geom_->sorted_candidate_radii();
    std::size_t lo = 0, hi = radii.size() - 1;
    // The diameter radius is always feasible here (check_solvable passed).
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (feasible(res, kappa, radii[mid]).has_value()) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    KCenterSolution sol;
    sol.radius = radii[lo];
    sol.centers = feasible(res, kappa, sol.radius).value();
    sol.outliers = uncovered_at(res, sol.centers, sol.radius);
    sol.beta = 1.0;
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      memo_.emplace(std::move(key), sol);
    }
    return sol;
  }

  // Greedy heuristic: repeatedly picks the (center, radius) ball that reduces
  // the total requirement deficit most, preferring smaller radii then smaller
  // ids; if deficits remain after the last pick, that ball falls back to the
  // diameter radius. Feasible output, no approximation guarantee.
  KCenterSolution solve_greedy(const ResidualInstance& res, int kappa) const {
    check_solvable(res, kappa);
    const int omega = inst_->num_classes();
    std::vector<int> deficits = res.required;
    Bitset covered(inst_->n());
    std::vector<std::pair<int, double>> picks;
    auto deficits_remain = [&] {
      for (int d : deficits) {
        if (d > 0) return true;
      }
      return false;
    };
    std::vector<int> fresh(omega);
    const std::vector<int> alive_ids = res.alive.to_vector();
    while (static_cast<int>(picks.size()) < kappa && deficits_remain()) {
      int best_center = -1;
      double best_radius = 0;
      int best_gain = 0;
      for (int c : alive_ids) {
        for (double r : geom_->sorted_distances(c)) {
          const Bitset& ball = geom_->members(c, r);
          std::fill(fresh.begin(), fresh.end(), 0);
          ball.for_each_set([&](int p) {
            if (res.alive.test(p) && !covered.test(p)) ++fresh[inst_->class_of(p)];
          });
          int gain = 0;
          for (int i = 0; i < omega; ++i) gain += std::min(std::max(deficits[i], 0), fresh[i]);
          const bool better = gain > best_gain ||
                              (gain == best_gain && gain > 0 &&
                               (r < best_radius || (r == best_radius && c < best_center)));
          if (better) {
            best_gain = gain;
            best_center = c;
            best_radius = r;
          }
        }
      }
      if (best_gain == 0) break;
      picks.emplace_back(best_center, best_radius);
      apply_pick(res, best_center, best_radius, covered, deficits);
    }
    if (deficits_remain()) {
      const double diameter = geom_->sorted_candidate_radii().back();
      if (picks.empty()) {
        picks.emplace_back(res.alive.first_set(), diameter);
      } else {
        picks.back().second = diameter;
      }
      covered.clear();
      deficits = res.required;
      for (const auto& [c, r] : picks) apply_pick(res, c, r, covered, deficits);
    }
    KCenterSolution sol;
    for (const auto& [c, r] : picks) {
      sol.centers.push_back(c);
      sol.radius = std::max(sol.radius, r);
    }
    std::sort(sol.centers.begin(), sol.centers.end());
    sol.outliers = uncovered_at(res, sol.centers, sol.radius);
    sol.beta = std::nullopt;
    return sol;
  }

 private:
  struct MemoKey {
    std::uint64_t hash;
    int kappa;
    std::vector<std::uint64_t> words;
    std::vector<int> required;

    friend bool operator==(const MemoKey& a, const MemoKey& b) {
      return a.hash == b.hash && a.kappa == b.kappa && a.words == b.words &&
             a.required == b.required;
    }
  };

  struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const { return static_cast<std::size_t>(k.hash); }
  };

  std::uint64_t hash_residual(const ResidualInstance& res, int kappa) const {
    std::uint64_t h = hash_words(res.alive.words(), 0x9e3779b97f4a7c15ull + kappa);
    for (int r : res.required) h = (h ^ static_cast<std::uint64_t>(r + 1)) * 1099511628211ull;
    return h;
  }

  void check_solvable(const ResidualInstance& res, int kappa) const {
    if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
    bool needs_center = false;
    for (int i = 0; i < inst_->num_classes(); ++i) {
      if (res.required[i] > res.alive_count(*geom_, i))
        throw InfeasibleInstanceError("residual requirements exceed available points");
      if (res.required[i] > 0) needs_center = true;
    }
    if (needs_center && kappa == 0)
      throw InfeasibleInstanceError("residual requires coverage but kappa = 0");
  }

  void apply_pick(const ResidualInstance& res, int center, double radius, Bitset& covered,
                  std::vector<int>& deficits) const {
    const Bitset& ball = geom_->members(center, radius);
    ball.for_each_set([&](int p) {
      if (!res.alive.test(p) || covered.test(p)) return;
      covered.set(p);
      deficits[inst_->class_of(p)] -= 1;
    });
  }

  std::vector<int> uncovered_at(const ResidualInstance& res, const std::vector<int>& centers,
                                double radius) const {
    Bitset covered(inst_->n());
    for (int c : centers) covered |= geom_->members(c, radius);
    std::vector<int> out;
    res.alive.for_each_set([&](int p) {
      if (!covered.test(p)) out.push_back(p);
    });
    return out;
  }

  // Depth-first search over candidate centers in increasing id order with
  // include-first exploration, which makes the first feasible set found the
  // lexicographically smallest one. Pruned by per-class and total deficit
  // bounds: remaining slots x best single-ball gain.
  class FeasSearch {
   public:
    FeasSearch(const KCenterSolver& solver, const ResidualInstance& res, int kappa, double radius)
        : s_(solver), res_(res), kappa_(kappa), radius_(radius), covered_(solver.inst_->n()) {
      alive_ids_ = res.alive.to_vector();
      deficits_ = res.required;
    }

    std::optional<std::vector<int>> run() {
      if (met()) return std::vector<int>{};
      if (dfs(0)) return chosen_;
      return std::nullopt;
    }

   private:
    bool met() const {
      for (int d : deficits_) {
        if (d > 0) return false;
      }
      return true;
    }

    bool dfs(std::size_t start) {
      s_.count_node();
      if (static_cast<int>(chosen_.size()) == kappa_) return false;
      const int remaining = kappa_ - static_cast<int>(chosen_.size());
      // Bound: for each class, the best single ball among remaining
      // candidates caps what one more center can add.
      const int omega = s_.inst_->num_classes();
      std::vector<int> best_gain(omega, 0);
      int best_total = 0;
      std::vector<int> fresh(omega);
      for (std::size_t ci = start; ci < alive_ids_.size(); ++ci) {
        const Bitset& ball = s_.geom_->members(alive_ids_[ci], radius_);
        int total = 0;
        for (int i = 0; i < omega; ++i) {
          fresh[i] = 0;
        }
        ball.for_each_set([&](int p) {
          if (res_.alive.test(p) && !covered_.test(p)) ++fresh[s_.inst_->class_of(p)];
        });
        for (int i = 0; i < omega; ++i) {
          const int capped = std::min(fresh[i], std::max(deficits_[i], 0));
          best_gain[i] = std::max(best_gain[i], fresh[i]);
          total += capped;
        }
        best_total = std::max(best_total, total);
      }
      int total_deficit = 0;
      for (int i = 0; i < omega; ++i) {
        const int d = std::max(deficits_[i], 0);
        total_deficit += d;
        if (d > remaining * best_gain[i]) return false;
      }
      if (total_deficit > remaining * best_total) return false;

      for (std::size_t ci = start; ci < alive_ids_.size(); ++ci) {
        const int c = alive_ids_[ci];
        std::vector<int> touched;
        const Bitset& ball = s_.geom_->members(c, radius_);
        ball.for_each_set([&](int p) {
          if (res_.alive.test(p) && !covered_.test(p)) {
            covered_.set(p);
            deficits_[s_.inst_->class_of(p)] -= 1;
            touched.push_back(p);
          }
        });
        chosen_.push_back(c);
        if (met()) return true;
        if (dfs(ci + 1)) return true;
        chosen_.pop_back();
        for (int p : touched) {
          covered_.reset(p);
          deficits_[s_.inst_->class_of(p)] += 1;
        }
      }
      return false;
    }

    const KCenterSolver& s_;
    const ResidualInstance& res_;
    int kappa_;
    double radius_;
    Bitset covered_;
    std::vector<int> alive_ids_;
    std::vector<int> deficits_;
    std::vector<int> chosen_;
  };

  void count_node() const {
    const auto used = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > opts_.node_budget)
      throw NodeBudgetExceeded("k-center feasibility search exceeded its node budget");
  }

  const Instance* inst_;
  const detail::BallGeometry* geom_;
  KCenterOptions opts_;
  mutable std::atomic<std::uint64_t> nodes_{0};
  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<MemoKey, KCenterSolution, MemoKeyHash> memo_;
};

}  // namespace sumradii
