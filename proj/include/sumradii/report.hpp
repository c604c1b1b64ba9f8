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
#include <cstdio>
#include <cstring>
#include <optional>
#include <string>

#include <json.hpp>

#include "sumradii/core.hpp"

namespace sumradii {

// FNV-1a over the instance's defining data; identifies instances in reports.
inline std::string instance_digest(const Instance& inst) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  auto mix_double = [&](double d) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(d));
    std::memcpy(&bits, &d, sizeof(bits));
    mix(bits);
  };
  mix(inst.metric() == MetricKind::kEuclidean ? 1 : 2);
  mix(static_cast<std::uint64_t>(inst.n()));
  mix(static_cast<std::uint64_t>(inst.k()));
  for (int b : inst.outlier_budgets()) mix(static_cast<std::uint64_t>(b) + 1);
  for (const auto& p : inst.points()) {
    mix(static_cast<std::uint64_t>(p.class_id) + 1);
    for (double c : p.coords) mix_double(c);
  }
  if (inst.metric() == MetricKind::kExplicit) {
    for (int a = 0; a < inst.n(); ++a) {
      for (int b = 0; b < inst.n(); ++b) mix_double(inst.distance(a, b));
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// One machine-readable record per solver run; emitted as a JSON line.
struct RunReport {
  std::string algo;
  std::optional<std::string> kcenter;  // subroutine identity, sor7 only
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::string instance_digest;
  double cost = 0;
  bool feasible = false;
  std::optional<double> ratio;       // vs. oracle OPT, when computed
  std::optional<double> guarantee;   // claimed approximation factor; absent = VOID
  double wall_ms = 0;
  std::uint64_t nodes = 0;
  std::uint64_t profiles = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline nlohmann::json report_to_json(const RunReport& r) {
  nlohmann::json j;
  j["algo"] = r.algo;
  j["kcenter"] = r.kcenter ? nlohmann::json(*r.kcenter) : nlohmann::json(nullptr);
  j["epsilon"] = r.epsilon ? nlohmann::json(*r.epsilon) : nlohmann::json(nullptr);
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  j["instance_digest"] = r.instance_digest;
  j["cost"] = r.cost;
  j["feasible"] = r.feasible;
  j["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
  j["guarantee"] = r.guarantee ? nlohmann::json(*r.guarantee) : nlohmann::json("VOID");
  j["wall_ms"] = r.wall_ms;
  j["nodes"] = r.nodes;
  j["profiles"] = r.profiles;
  return j;
}

inline RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  r.algo = j.at("algo").get<std::string>();
  if (!j.at("kcenter").is_null()) r.kcenter = j.at("kcenter").get<std::string>();
  if (!j.at("epsilon").is_null()) r.epsilon = j.at("epsilon").get<double>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  r.instance_digest = j.at("instance_digest").get<std::string>();
  r.cost = j.at("cost").get<double>();
  r.feasible = j.at("feasible").get<bool>();
  if (!j.at("ratio").is_null()) r.ratio = j.at("ratio").get<double>();
  if (j.at("guarantee").is_number()) r.guarantee = j.at("guarantee").get<double>();
  r.wall_ms = j.at("wall_ms").get<double>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.profiles = j.at("profiles").get<std::uint64_t>();
  return r;
}

}  // namespace sumradii
