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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumradii/core.hpp"

namespace sumradii {

// Instance file format:
//   {"metric":"euclidean"|"explicit",
//    "points":[{"class":int,"coords":[..]} ...],
//    "matrix":[[..]..]        (explicit only),
//    "k":int, "m":[int,...]}
inline nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["metric"] = inst.metric() == MetricKind::kEuclidean ? "euclidean" : "explicit";
  j["points"] = nlohmann::json::array();
  for (const auto& p : inst.points()) {
    nlohmann::json jp;
    jp["class"] = p.class_id;
    if (!p.coords.empty()) jp["coords"] = p.coords;
    j["points"].push_back(jp);
  }
  if (inst.metric() == MetricKind::kExplicit) {
    nlohmann::json m = nlohmann::json::array();
    for (int a = 0; a < inst.n(); ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < inst.n(); ++b) row.push_back(inst.distance(a, b));
      m.push_back(row);
    }
    j["matrix"] = m;
  }
  j["k"] = inst.k();
  j["m"] = inst.outlier_budgets();
  return j;
}

inline Instance instance_from_json(const nlohmann::json& j, const ValidationOptions& opts = {}) {
  if (!j.contains("metric") || !j.contains("points") || !j.contains("k") || !j.contains("m"))
    throw std::invalid_argument("instance json requires metric, points, k, m");
  const std::string metric = j.at("metric").get<std::string>();
  std::vector<PointRecord> points;
  for (const auto& jp : j.at("points")) {
    PointRecord p;
    p.class_id = jp.at("class").get<int>();
    if (jp.contains("coords")) p.coords = jp.at("coords").get<std::vector<double>>();
    points.push_back(std::move(p));
  }
  const int k = j.at("k").get<int>();
  auto budgets = j.at("m").get<std::vector<int>>();
  if (metric == "euclidean") {
    return Instance::from_coords(std::move(points), k, std::move(budgets), opts);
  }
  if (metric == "explicit") {
    auto matrix = j.at("matrix").get<std::vector<std::vector<double>>>();
    return Instance::from_matrix(std::move(points), std::move(matrix), k, std::move(budgets), opts);
  }
  throw std::invalid_argument("metric must be \"euclidean\" or \"explicit\"");
}

// Solution file format:
//   {"balls":[{"center":int,"radius":float,"slot":"cluster"|"outlier"} ...]}
inline nlohmann::json balls_to_json(const std::vector<Ball>& balls) {
  nlohmann::json j;
  j["balls"] = nlohmann::json::array();
  for (const Ball& b : balls) {
    j["balls"].push_back({{"center", b.center},
                          {"radius", b.radius},
                          {"slot", b.slot == Slot::kCluster ? "cluster" : "outlier"}});
  }
  return j;
}

inline nlohmann::json solution_to_json(const Solution& sol) { return balls_to_json(sol.balls); }

inline std::vector<Ball> balls_from_json(const nlohmann::json& j) {
  std::vector<Ball> balls;
  for (const auto& jb : j.at("balls")) {
    Ball b;
    b.center = jb.at("center").get<int>();
    b.radius = jb.at("radius").get<double>();
    const std::string slot = jb.at("slot").get<std::string>();
    if (slot == "cluster") {
      b.slot = Slot::kCluster;
    } else if (slot == "outlier") {
      b.slot = Slot::kOutlier;
    } else {
      throw std::invalid_argument("ball slot must be \"cluster\" or \"outlier\"");
    }
    balls.push_back(b);
  }
  return balls;
}

inline Solution solution_from_json(const Instance& inst, const nlohmann::json& j) {
  return make_solution(inst, balls_from_json(j));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

inline Instance load_instance(const std::string& path, const ValidationOptions& opts = {}) {
  return instance_from_json(nlohmann::json::parse(read_text_file(path)), opts);
}

inline void save_instance(const std::string& path, const Instance& inst) {
  write_text_file(path, instance_to_json(inst).dump(2) + "\n");
}

inline Solution load_solution(const std::string& path, const Instance& inst) {
  return solution_from_json(inst, nlohmann::json::parse(read_text_file(path)));
}

inline void save_solution(const std::string& path, const Solution& sol) {
  write_text_file(path, solution_to_json(sol).dump(2) + "\n");
}

}  // namespace sumradii
