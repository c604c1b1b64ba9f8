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
#include <optional>
#include <stdexcept>
#include <vector>

#include "sumradii/core.hpp"

namespace sumradii {

// A non-increasing guess (r1 >= r2 >= ... >= rk >= 0) of the optimal cluster
// radii. The enumerated collection is guaranteed to contain a profile that
// dominates the optimal radii componentwise while exceeding their sum by at
// most a (1+eps)^2 factor.
struct RadiusProfile {
  std::vector<double> radii;

  bool non_increasing() const {
    for (std::size_t i = 1; i < radii.size(); ++i) {
      if (radii[i] > radii[i - 1]) return false;
    }
    return true;
  }

  double sum() const {
    double s = 0;
    for (double r : radii) s += r;
    return s;
  }

  friend bool operator==(const RadiusProfile&, const RadiusProfile&) = default;
};

// Candidates for the largest radius, given the value r of a beta-approximate
// colorful k-center solution: the geometric ladder (1+eps)^l * r/beta for
// l = 1 .. max(1, ceil(log_{1+eps}(beta*k))). Whenever the largest optimal
// radius lies in [r/beta, k*r], some candidate c satisfies
// r1* <= c <= (1+eps) * r1*. The lower clamp to one rung covers beta*k = 1,
// where the interval collapses to a single point.
inline std::vector<double> head_candidates(double r, double beta, int k, double eps) {
  if (!(r > 0)) throw std::invalid_argument("head_candidates requires r > 0");
  if (!(beta >= 1)) throw std::invalid_argument("head_candidates requires beta >= 1");
  if (k < 1) throw std::invalid_argument("head_candidates requires k >= 1");
  if (!(eps > 0)) throw std::invalid_argument("head_candidates requires eps > 0");
  const int rungs =
      std::max(1, static_cast<int>(std::ceil(std::log(beta * k) / std::log1p(eps))));
  std::vector<double> out;
  out.reserve(rungs);
  double value = r / beta;
  for (int l = 0; l < rungs; ++l) {
    value *= (1 + eps);
    out.push_back(value);
  }
  return out;
}

// Candidates for the remaining radii, given a guess for the largest one:
// {0}, the geometric grid (eps/k) * r1 * (1+eps)^j clipped to (0, r1], and
// r1 itself. Optimal radii below the grid floor are represented by the floor;
// the resulting overshoot is at most eps * r1 in total.
inline std::vector<double> tail_candidates(double r1_guess, int k, double eps) {
  if (!(r1_guess > 0)) throw std::invalid_argument("tail_candidates requires r1_guess > 0");
  if (k < 1) throw std::invalid_argument("tail_candidates requires k >= 1");
  if (!(eps > 0)) throw std::invalid_argument("tail_candidates requires eps > 0");
  std::vector<double> out;
  out.push_back(0.0);
  for (double v = (eps / k) * r1_guess; v <= r1_guess; v *= (1 + eps)) out.push_back(v);
  out.push_back(r1_guess);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Lazy stream of radius profiles, in lexicographic order: heads ascending,
// then for each head the non-increasing tail combinations starting from the
// all-head profile. A k-center value of zero collapses the ladder and yields
// the single all-zero profile.
class ProfileStream {
 public:
  ProfileStream(double kcenter_value, double beta, int k, double eps) : k_(k) {
    if (k < 1) throw std::invalid_argument("profile stream requires k >= 1");
    if (kcenter_value == 0) {
      degenerate_ = true;
      return;
    }
    heads_ = head_candidates(kcenter_value, beta, k, eps);
    eps_ = eps;
    start_head(0);
  }

  std::optional<RadiusProfile> next() {
    if (degenerate_) {
      if (emitted_degenerate_) return std::nullopt;
      emitted_degenerate_ = true;
      return RadiusProfile{std::vector<double>(k_, 0.0)};
    }
    if (head_idx_ >= heads_.size()) return std::nullopt;
    RadiusProfile p;
    p.radii.reserve(k_);
    p.radii.push_back(heads_[head_idx_]);
    for (int idx : tail_idx_) p.radii.push_back(tails_desc_[idx]);
    advance();
    return p;
  }

  std::vector<RadiusProfile> drain() {
    std::vector<RadiusProfile> out;
    while (auto p = next()) out.push_back(std::move(*p));
    return out;
  }

 private:
  void start_head(std::size_t h) {
    head_idx_ = h;
    if (head_idx_ >= heads_.size()) return;
    tails_desc_ = tail_candidates(heads_[head_idx_], k_, eps_);
    std::reverse(tails_desc_.begin(), tails_desc_.end());  // descending
    tail_idx_.assign(k_ - 1, 0);
  }

  void advance() {
    // Next non-decreasing index vector into the descending tail list.
    const int limit = static_cast<int>(tails_desc_.size()) - 1;
    int j = static_cast<int>(tail_idx_.size()) - 1;
    while (j >= 0 && tail_idx_[j] == limit) --j;
    if (j < 0) {
      start_head(head_idx_ + 1);
      return;
    }
    const int v = tail_idx_[j] + 1;
    for (std::size_t t = j; t < tail_idx_.size(); ++t) tail_idx_[t] = v;
  }

  int k_;
  double eps_ = 0;
  bool degenerate_ = false;
  bool emitted_degenerate_ = false;
  std::vector<double> heads_;
  std::size_t head_idx_ = 0;
  std::vector<double> tails_desc_;
  std::vector<int> tail_idx_;
};

inline std::vector<RadiusProfile> enumerate_profiles(double kcenter_value, double beta, int k,
                                                     double eps) {
  return ProfileStream(kcenter_value, beta, k, eps).drain();
}

inline std::vector<RadiusProfile> enumerate_profiles(const Instance& inst, double kcenter_value,
                                                     double beta, double eps) {
  return enumerate_profiles(kcenter_value, beta, inst.k(), eps);
}

}  // namespace sumradii
