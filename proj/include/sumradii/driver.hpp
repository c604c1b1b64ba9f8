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

#include <chrono>
#include <optional>
#include <string>

#include "sumradii/core.hpp"
#include "sumradii/cover2.hpp"
#include "sumradii/kcenter.hpp"
#include "sumradii/oracle.hpp"
#include "sumradii/report.hpp"
#include "sumradii/sor7.hpp"

namespace sumradii {

// One request covers every solver the CLI exposes. Every run ends with
// verify_solution; no unverified cost ever leaves this function.
struct AlgoRequest {
  std::string algo = "cover2";  // cover2|sor7|oracle|kcenter-exact|kcenter-greedy
  double epsilon = 1.0;
  KCenterMode kcenter = KCenterMode::kExact;
  std::uint64_t node_budget = 200'000'000;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  OracleCaps oracle_caps;
};

struct RunOutcome {
  Solution solution;
  RunReport report;
};

inline RunOutcome run_algorithm(const Instance& inst, const AlgoRequest& req) {
  RunOutcome out;
  out.report.algo = req.algo;
  out.report.seed = req.seed;
  out.report.instance_digest = instance_digest(inst);
  const auto start = std::chrono::steady_clock::now();

  if (req.algo == "cover2") {
    Cover2Options opts;
    opts.epsilon = req.epsilon;
    opts.node_budget = req.node_budget;
    opts.jobs = req.jobs;
    SolveResult r = solve_cover2(inst, opts);
    out.solution = std::move(r.solution);
    out.report.epsilon = req.epsilon;
    out.report.guarantee = r.guarantee;
    out.report.nodes = r.stats.nodes;
    out.report.profiles = r.stats.profiles;
  } else if (req.algo == "sor7") {
    Sor7Options opts;
    opts.epsilon = req.epsilon;
    opts.kcenter = req.kcenter;
    opts.node_budget = req.node_budget;
    opts.jobs = req.jobs;
    SolveResult r = solve_sor7(inst, opts);
    out.solution = std::move(r.solution);
    out.report.epsilon = req.epsilon;
    out.report.kcenter = req.kcenter == KCenterMode::kExact ? "exact" : "greedy";
    out.report.guarantee = r.guarantee;
    out.report.nodes = r.stats.nodes;
    out.report.profiles = r.stats.profiles;
  } else if (req.algo == "oracle") {
    OracleResult r = solve_exact_sor(inst, req.oracle_caps);
    out.solution = std::move(r.solution);
    out.report.guarantee = 1.0;
  } else if (req.algo == "kcenter-exact" || req.algo == "kcenter-greedy") {
    detail::BallGeometry geom(inst);
    KCenterSolver solver(inst, geom, {req.node_budget});
    const ResidualInstance res = full_residual(inst);
    const KCenterSolution kc = req.algo == "kcenter-exact" ? solver.solve_exact(res, inst.k())
                                                           : solver.solve_greedy(res, inst.k());
    std::vector<Ball> balls;
    for (int c : kc.centers) balls.push_back({c, kc.radius, Slot::kCluster});
    out.solution = make_solution(inst, balls);
    out.report.kcenter = req.algo == "kcenter-exact" ? "exact" : "greedy";
    out.report.nodes = solver.nodes_explored();
    if (kc.beta) out.report.guarantee = *kc.beta;
  } else {
    throw std::invalid_argument("unknown algorithm: " + req.algo);
  }

  const FeasibilityReport feas = verify_solution(inst, out.solution);
  out.report.cost = feas.cost;
  out.report.feasible = feas.feasible;
  const auto end = std::chrono::steady_clock::now();
  out.report.wall_ms = std::chrono::duration<double, std::milli>(end - start).count();
  return out;
}

}  // namespace sumradii
