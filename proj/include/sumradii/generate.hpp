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
#include <random>
#include <stdexcept>
#include <vector>

#include "sumradii/core.hpp"

namespace sumradii {

enum class GenMode { kUniform, kPlanted };

// Deterministic instance generator: identical specs produce byte-identical
// instances. Classes are assigned round-robin and then shuffled by the seed.
struct GeneratorSpec {
  int n = 8;
  int omega = 2;
  int k = 2;
  std::vector<int> budgets = {1, 1};
  int dim = 2;
  GenMode mode = GenMode::kUniform;
  int planted_clusters = 2;   // planted mode only
  double spread = 0.05;       // planted mode only
  std::uint64_t seed = 0;
};

inline Instance generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator requires n >= 1");
  if (spec.omega < 1) throw std::invalid_argument("generator requires omega >= 1");
  if (static_cast<int>(spec.budgets.size()) != spec.omega)
    throw std::invalid_argument("generator requires |m| == omega");
  if (spec.k < 1 || spec.k > spec.n) throw std::invalid_argument("generator requires 1 <= k <= n");
  if (spec.dim < 1) throw std::invalid_argument("generator requires dim >= 1");
  for (int i = 0; i < spec.omega; ++i) {
    const int class_size = spec.n / spec.omega + (i < spec.n % spec.omega ? 1 : 0);
    if (spec.budgets[i] < 0 || spec.budgets[i] > class_size)
      throw std::invalid_argument("generator requires 0 <= m_i <= n_i");
  }
  if (spec.mode == GenMode::kPlanted) {
    if (spec.planted_clusters < 1)
      throw std::invalid_argument("planted mode requires >= 1 cluster");
    if (!(spec.spread >= 0)) throw std::invalid_argument("planted spread must be nonnegative");
  }

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<PointRecord> points(spec.n);
  if (spec.mode == GenMode::kUniform) {
    for (auto& p : points) {
      p.coords.resize(spec.dim);
      for (double& c : p.coords) c = unit(rng);
    }
  } else {
    std::vector<std::vector<double>> centers(spec.planted_clusters,
                                             std::vector<double>(spec.dim));
    for (auto& c : centers) {
      for (double& x : c) x = unit(rng);
    }
    std::uniform_real_distribution<double> offset(-spec.spread, spec.spread);
    for (int i = 0; i < spec.n; ++i) {
      const auto& center = centers[i % spec.planted_clusters];
      points[i].coords.resize(spec.dim);
      for (int d = 0; d < spec.dim; ++d) points[i].coords[d] = center[d] + offset(rng);
    }
  }

  std::vector<int> classes(spec.n);
  for (int i = 0; i < spec.n; ++i) classes[i] = i % spec.omega;
  std::shuffle(classes.begin(), classes.end(), rng);
  for (int i = 0; i < spec.n; ++i) points[i].class_id = classes[i];

  return Instance::from_coords(std::move(points), spec.k, spec.budgets);
}

}  // namespace sumradii
