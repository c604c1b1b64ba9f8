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
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "sumradii/core.hpp"

namespace sumradii::detail {

// User-facing epsilon for a target ratio (gap + eps) is narrowed before
// profile enumeration: the dominating profile's sum exceeds OPT by at most
// (1 + eps')^2, so eps' = sqrt(1 + eps/gap) - 1 makes the end-to-end bound
// gap * (1 + eps/gap) = gap + eps hold exactly.
inline double internal_epsilon(double user_eps, double gap) {
  return std::sqrt(1.0 + user_eps / gap) - 1.0;
}

inline std::vector<Ball> canonical_balls(std::vector<Ball> balls) {
  std::sort(balls.begin(), balls.end(), [](const Ball& a, const Ball& b) {
    if (a.center != b.center) return a.center < b.center;
    if (a.radius != b.radius) return a.radius < b.radius;
    return static_cast<int>(a.slot) < static_cast<int>(b.slot);
  });
  return balls;
}

// Total order on ball lists, exact in the radii (hexfloat), used to break
// cost ties deterministically regardless of exploration order.
inline std::string serial_key(const std::vector<Ball>& canonical) {
  std::string out;
  char buf[48];
  for (const Ball& b : canonical) {
    std::snprintf(buf, sizeof(buf), "%d:%a:%d;", b.center, b.radius,
                  b.slot == Slot::kCluster ? 0 : 1);
    out += buf;
  }
  return out;
}

inline double canonical_cost(const std::vector<Ball>& canonical) {
  double c = 0;
  for (const Ball& b : canonical) {
    if (b.slot == Slot::kCluster) c += b.radius;
  }
  return c;
}

// Best feasible candidate so far. The final result is the minimum of
// (cost, serial key) over every candidate offered, which is independent of
// exploration order; the relaxed `bound` only serves pruning.
class Incumbent {
 public:
  explicit Incumbent(double initial_bound = std::numeric_limits<double>::infinity())
      : bound_(initial_bound) {}

  double bound() const { return bound_.load(std::memory_order_relaxed); }

  void offer(std::vector<Ball> balls) {
    auto canonical = canonical_balls(std::move(balls));
    const double cost = canonical_cost(canonical);
    std::string key = serial_key(canonical);
    std::lock_guard<std::mutex> lock(mutex_);
    if (!has_best_ || cost < best_cost_ || (cost == best_cost_ && key < best_key_)) {
      has_best_ = true;
      best_cost_ = cost;
      best_key_ = std::move(key);
      best_balls_ = std::move(canonical);
      double cur = bound_.load(std::memory_order_relaxed);
      while (cost < cur && !bound_.compare_exchange_weak(cur, cost)) {
      }
    }
  }

  std::vector<Ball> best_balls() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return best_balls_;
  }

  bool has_best() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return has_best_;
  }

 private:
  mutable std::mutex mutex_;
  bool has_best_ = false;
  double best_cost_ = std::numeric_limits<double>::infinity();
  std::string best_key_;
  std::vector<Ball> best_balls_;
  std::atomic<double> bound_;
};

// Runs fn(index) for index in [0, count) over `jobs` workers. Exceptions are
// captured and rethrown on the caller thread.
template <typename Fn>
void parallel_for_index(int jobs, std::size_t count, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex err_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const int spawn = std::min<std::size_t>(jobs, count);
  threads.reserve(spawn);
  for (int t = 0; t < spawn; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

inline int default_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Shared node accounting across workers with a hard budget.
class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}

  void bump(const char* what) {
    const auto used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > budget_) throw NodeBudgetExceeded(std::string(what) + " exceeded its node budget");
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> used_{0};
};

}  // namespace sumradii::detail
