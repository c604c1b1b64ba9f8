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

// Acceptance suite: property-based guarantees checked against the exact
// brute-force oracle on a generated desk-scale corpus. Prints one pass/fail
// line per criterion and exits nonzero if any fail.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "sumradii/cover2.hpp"
#include "sumradii/driver.hpp"
#include "sumradii/generate.hpp"
#include "sumradii/io.hpp"
#include "sumradii/kcenter.hpp"
#include "sumradii/oracle.hpp"
#include "sumradii/profiles.hpp"
#include "sumradii/report.hpp"
#include "sumradii/sor7.hpp"

namespace {

using namespace sumradii;

constexpr double kTol = 1e-9;
constexpr int kCorpusSize = 200;

// Corpus: n <= 12, k <= 3, omega <= 3, sum(m) <= 3, uniform and planted.
std::vector<Instance> build_corpus() {
  std::vector<Instance> corpus;
  corpus.reserve(kCorpusSize);
  std::mt19937_64 rng(20260808);
  while (static_cast<int>(corpus.size()) < kCorpusSize) {
    GeneratorSpec spec;
    spec.n = 4 + static_cast<int>(rng() % 9);             // 4..12
    spec.omega = 1 + static_cast<int>(rng() % 3);         // 1..3
    spec.k = 1 + static_cast<int>(rng() % 3);             // 1..3
    if (spec.k > spec.n) spec.k = spec.n;
    spec.dim = 1 + static_cast<int>(rng() % 2);           // 1..2
    spec.mode = corpus.size() % 2 == 0 ? GenMode::kUniform : GenMode::kPlanted;
    spec.planted_clusters = std::max(1, spec.k);
    spec.spread = 0.05 + 0.1 * (rng() % 3);
    spec.seed = rng();
    spec.budgets.assign(spec.omega, 0);
    const int total_budget = static_cast<int>(rng() % 4);  // sum(m) <= 3
    for (int b = 0; b < total_budget; ++b) {
      const int cls = static_cast<int>(rng() % spec.omega);
      const int class_size = spec.n / spec.omega + (cls < spec.n % spec.omega ? 1 : 0);
      if (spec.budgets[cls] < class_size) ++spec.budgets[cls];
    }
    corpus.push_back(generate(spec));
  }
  return corpus;
}

// Criteria 1 & 2: solver cost within (gap + eps) * OPT on the whole corpus.
bool check_ratio_criterion(const std::vector<Instance>& corpus, const std::string& algo,
                           double gap, std::string& out_detail) {
  std::atomic<bool> ok{true};
  std::mutex mu;
  double worst_ratio = 0;
  std::string failure;
  detail::parallel_for_index(2, corpus.size(), [&](std::size_t idx) {
    const Instance& inst = corpus[idx];
    const double opt = solve_exact_sor(inst).opt_cost;
    for (double eps : {0.5, 1.0}) {
      double cost = 0;
      bool feasible = false;
      if (algo == "cover2") {
        const auto r = solve_cover2(inst, {.epsilon = eps});
        cost = r.solution.cost;
        feasible = verify_solution(inst, r.solution).feasible;
      } else {
        const auto r = solve_sor7(inst, {.epsilon = eps});
        cost = r.solution.cost;
        feasible = verify_solution(inst, r.solution).feasible;
      }
      const double bound = (gap + eps) * opt + kTol;
      const double ratio = opt > 0 ? cost / opt : (cost <= kTol ? 1.0 : -1.0);
      std::lock_guard<std::mutex> lock(mu);
      worst_ratio = std::max(worst_ratio, ratio);
      if (!feasible || cost > bound || ratio < 0) {
        ok = false;
        if (failure.empty())
          failure = "instance " + std::to_string(idx) + " eps=" + std::to_string(eps) +
                    " cost=" + std::to_string(cost) + " opt=" + std::to_string(opt);
      }
    }
  });
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%d instances, eps in {0.5, 1}, worst ratio %.4f",
                kCorpusSize, worst_ratio);
  out_detail = ok ? buf : failure;
  return ok;
}

// Criterion 3: exact colorful k-center radius <= largest oracle radius.
bool check_kcenter_lower_bound(const std::vector<Instance>& corpus, std::string& out_detail) {
  std::atomic<bool> ok{true};
  detail::parallel_for_index(2, corpus.size(), [&](std::size_t idx) {
    const Instance& inst = corpus[idx];
    const auto oracle = solve_exact_sor(inst);
    detail::BallGeometry geom(inst);
    KCenterSolver solver(inst, geom);
    const auto kc = solver.solve_exact(full_residual(inst), inst.k());
    if (kc.radius > oracle.sorted_radii[0] + kTol) ok = false;
  });
  out_detail = "k-center radius <= r1* on all " + std::to_string(kCorpusSize) + " instances";
  return ok;
}

// Criterion 4: after removing the oracle's top-i balls, the residual
// (k-i)-center value is at most 2 * r*_{i+1}.
bool check_residual_radius_bound(const std::vector<Instance>& corpus, std::string& out_detail) {
  std::atomic<bool> ok{true};
  std::atomic<int> checked{0};
  detail::parallel_for_index(2, corpus.size(), [&](std::size_t idx) {
    const Instance& inst = corpus[idx];
    const auto oracle = solve_exact_sor(inst);
    detail::BallGeometry geom(inst);
    KCenterSolver solver(inst, geom);
    std::vector<std::pair<double, int>> order;
    for (const Ball& b : oracle.solution.balls) order.emplace_back(-b.radius, b.center);
    std::sort(order.begin(), order.end());
    std::vector<Ball> top;
    for (std::size_t i = 0; i < order.size(); ++i) {
      top.push_back({order[i].second, -order[i].first, Slot::kCluster});
      if (static_cast<int>(i) + 1 >= inst.k()) break;
      const ResidualInstance res = residual_instance(inst, geom, top);
      const auto sol = solver.solve_exact(res, inst.k() - static_cast<int>(top.size()));
      if (sol.radius > 2 * oracle.sorted_radii[i + 1] + kTol) ok = false;
      ++checked;
    }
  });
  out_detail = std::to_string(checked.load()) + " residual instances checked";
  return ok;
}

// Criterion 5: counting equals a naive per-point recount on 1000 triples.
bool check_counting_equivalence(std::string& out_detail) {
  std::mt19937_64 rng(512);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    GeneratorSpec spec;
    spec.n = 3 + static_cast<int>(rng() % 10);
    spec.omega = 1 + static_cast<int>(rng() % 3);
    spec.k = 1;
    spec.budgets.assign(spec.omega, 0);
    spec.seed = rng();
    const Instance inst = generate(spec);
    const auto radii = candidate_radii(inst);
    std::vector<Ball> balls;
    const int num_balls = static_cast<int>(rng() % 5);
    for (int b = 0; b < num_balls; ++b) {
      const bool outlier = rng() % 4 == 0;
      balls.push_back({static_cast<int>(rng() % inst.n()),
                       outlier ? 0.0 : radii[rng() % radii.size()],
                       outlier ? Slot::kOutlier : Slot::kCluster});
    }
    std::vector<int> rho(spec.omega);
    for (int i = 0; i < spec.omega; ++i)
      rho[i] = static_cast<int>(rng() % (inst.class_size(i) + 1));

    const auto got = counting(inst, balls, ResidualRequirements{rho});
    std::vector<int> covered(spec.omega, 0);
    for (int p = 0; p < inst.n(); ++p) {
      bool inside = false;
      for (const Ball& b : balls) inside = inside || inst.distance(b.center, p) <= b.radius;
      if (inside) ++covered[inst.class_of(p)];
    }
    for (int i = 0; i < spec.omega; ++i) {
      if (got.rho[i] != std::max(0, rho[i] - covered[i])) {
        out_detail = "mismatch on trial " + std::to_string(trial);
        return false;
      }
    }
    ++checked;
  }
  out_detail = std::to_string(checked) + " randomized triples";
  return true;
}

// Criterion 6: the enumerated stream (beta = 1, eps = 0.5) contains a profile
// dominating the oracle radii with sum <= (1+eps)*OPT + eps*r1*.
bool check_profile_domination(const std::vector<Instance>& corpus, std::string& out_detail) {
  const double eps = 0.5;
  std::atomic<bool> ok{true};
  detail::parallel_for_index(2, corpus.size(), [&](std::size_t idx) {
    const Instance& inst = corpus[idx];
    const auto oracle = solve_exact_sor(inst);
    detail::BallGeometry geom(inst);
    KCenterSolver solver(inst, geom);
    const double r = solver.solve_exact(full_residual(inst), inst.k()).radius;
    bool found = false;
    for (const auto& p : enumerate_profiles(inst, r, 1.0, eps)) {
      bool dominates = true;
      for (int i = 0; i < inst.k(); ++i)
        dominates = dominates && p.radii[i] >= oracle.sorted_radii[i];
      if (dominates &&
          p.sum() <= (1 + eps) * oracle.opt_cost + eps * oracle.sorted_radii[0] + kTol) {
        found = true;
        break;
      }
    }
    if (!found) ok = false;
  });
  out_detail = "dominating profile found for all " + std::to_string(kCorpusSize) + " instances";
  return ok;
}

// Criterion 7: every emitted solution verifies feasible; the verifier
// survives 10,000 randomized inputs.
bool check_feasibility_and_fuzz(const std::vector<Instance>& corpus, std::string& out_detail) {
  std::atomic<bool> ok{true};
  detail::parallel_for_index(2, corpus.size(), [&](std::size_t idx) {
    if (idx % 5 != 0) return;  // ratio criteria already solve the full corpus
    const Instance& inst = corpus[idx];
    for (const char* algo : {"cover2", "sor7", "oracle", "kcenter-exact", "kcenter-greedy"}) {
      AlgoRequest req;
      req.algo = algo;
      req.epsilon = 1.0;
      if (!run_algorithm(inst, req).report.feasible) ok = false;
    }
  });
  if (!ok) {
    out_detail = "a solver emitted an infeasible solution";
    return false;
  }

  std::mt19937_64 rng(1337);
  int fuzzed = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    GeneratorSpec spec;
    spec.n = 1 + static_cast<int>(rng() % 10);
    spec.omega = 1 + static_cast<int>(rng() % 3);
    spec.k = 1 + static_cast<int>(rng() % spec.n);
    spec.budgets.assign(spec.omega, 0);
    for (int i = 0; i < spec.omega; ++i) {
      const int class_size = spec.n / spec.omega + (i < spec.n % spec.omega ? 1 : 0);
      spec.budgets[i] = static_cast<int>(rng() % (class_size + 1));
    }
    spec.seed = rng();
    const Instance inst = generate(spec);
    std::vector<Ball> balls;
    const int num_balls = static_cast<int>(rng() % 6);
    for (int b = 0; b < num_balls; ++b) {
      const bool outlier = rng() % 3 == 0;
      balls.push_back({static_cast<int>(rng() % inst.n()),
                       outlier ? 0.0 : std::ldexp(static_cast<double>(rng() % 4096), -10),
                       outlier ? Slot::kOutlier : Slot::kCluster});
    }
    try {
      const auto rep = verify_balls(inst, balls);
      (void)rep;
    } catch (const std::exception&) {
      out_detail = "verifier threw on valid-shaped input, trial " + std::to_string(trial);
      return false;
    }
    // Invalid ids must surface as exceptions, not crashes.
    if (trial % 100 == 0) {
      std::vector<Ball> bad = {{inst.n() + 3, 1.0, Slot::kCluster}};
      try {
        verify_balls(inst, bad);
        out_detail = "verifier accepted an out-of-range center";
        return false;
      } catch (const std::out_of_range&) {
      }
    }
    ++fuzzed;
  }
  out_detail = "all solver outputs feasible; " + std::to_string(fuzzed) + " fuzz inputs";
  return true;
}

// Criterion 8: the two independent oracles agree on opt_cost (n <= 8).
bool check_oracle_cross_check(std::string& out_detail) {
  std::mt19937_64 rng(2048);
  std::vector<Instance> small;
  while (small.size() < 100) {
    GeneratorSpec spec;
    spec.n = 3 + static_cast<int>(rng() % 6);  // 3..8
    spec.omega = 1 + static_cast<int>(rng() % 3);
    spec.k = 1 + static_cast<int>(rng() % 3);
    if (spec.k > spec.n) spec.k = spec.n;
    spec.mode = small.size() % 2 == 0 ? GenMode::kUniform : GenMode::kPlanted;
    spec.planted_clusters = spec.k;
    spec.budgets.assign(spec.omega, 0);
    const int total = static_cast<int>(rng() % 3);
    for (int b = 0; b < total; ++b) {
      const int cls = static_cast<int>(rng() % spec.omega);
      const int class_size = spec.n / spec.omega + (cls < spec.n % spec.omega ? 1 : 0);
      if (spec.budgets[cls] < class_size) ++spec.budgets[cls];
    }
    spec.seed = rng();
    small.push_back(generate(spec));
  }
  std::atomic<bool> ok{true};
  detail::parallel_for_index(2, small.size(), [&](std::size_t idx) {
    const double a = solve_exact_sor(small[idx]).opt_cost;
    const double b = assignment_oracle_cost(small[idx]);
    if (std::abs(a - b) > kTol) ok = false;
  });
  out_detail = std::to_string(small.size()) + " instances with n <= 8";
  return ok;
}

// Criterion 9: trivial endpoints.
bool check_trivial_endpoints(std::string& out_detail) {
  std::mt19937_64 rng(4096);
  // m_i = n_i: every algorithm returns cost 0.
  for (int trial = 0; trial < 10; ++trial) {
    GeneratorSpec spec;
    spec.n = 4 + static_cast<int>(rng() % 9);
    spec.omega = 1 + static_cast<int>(rng() % 3);
    spec.k = 1 + static_cast<int>(rng() % 3);
    spec.budgets.assign(spec.omega, 0);
    for (int i = 0; i < spec.omega; ++i)
      spec.budgets[i] = spec.n / spec.omega + (i < spec.n % spec.omega ? 1 : 0);
    spec.seed = rng();
    const Instance inst = generate(spec);
    for (const char* algo : {"cover2", "sor7", "oracle"}) {
      AlgoRequest req;
      req.algo = algo;
      req.epsilon = 0.5;
      const auto out = run_algorithm(inst, req);
      if (out.report.cost != 0.0 || !out.report.feasible) {
        out_detail = std::string("m=n endpoint violated by ") + algo;
        return false;
      }
    }
  }
  // m = 0, k = n: OPT = 0 and every algorithm returns 0.
  for (int trial = 0; trial < 10; ++trial) {
    GeneratorSpec spec;
    spec.n = 2 + static_cast<int>(rng() % 5);  // 2..6
    spec.omega = 1 + static_cast<int>(rng() % 2);
    spec.k = spec.n;
    spec.budgets.assign(spec.omega, 0);
    spec.seed = rng();
    const Instance inst = generate(spec);
    OracleCaps caps;
    caps.max_k = inst.n();
    if (solve_exact_sor(inst, caps).opt_cost != 0.0) {
      out_detail = "oracle OPT != 0 with k = n, m = 0";
      return false;
    }
    if (solve_cover2(inst, {.epsilon = 0.5}).solution.cost != 0.0 ||
        solve_sor7(inst, {.epsilon = 0.5}).solution.cost != 0.0) {
      out_detail = "a solver returned nonzero cost with k = n, m = 0";
      return false;
    }
  }
  out_detail = "m=n and (m=0, k=n) endpoints return cost 0 everywhere";
  return true;
}

// Criterion 10: identical (instance, algo, eps, seed) -> identical solutions
// and reports (wall time masked; nodes compared at jobs = 1), and identical
// solutions across thread counts.
bool check_determinism(const std::vector<Instance>& corpus, std::string& out_detail) {
  for (std::size_t idx : {std::size_t{3}, std::size_t{77}, std::size_t{142}}) {
    const Instance& inst = corpus[idx];
    for (const char* algo : {"cover2", "sor7", "oracle"}) {
      AlgoRequest req;
      req.algo = algo;
      req.epsilon = 0.5;
      req.seed = 7;
      req.jobs = 1;
      RunOutcome a = run_algorithm(inst, req);
      RunOutcome b = run_algorithm(inst, req);
      a.report.wall_ms = b.report.wall_ms = 0;
      if (!(a.report == b.report) ||
          solution_to_json(a.solution) != solution_to_json(b.solution)) {
        out_detail = std::string("repeated run differs for ") + algo;
        return false;
      }
      req.jobs = 2;
      const RunOutcome c = run_algorithm(inst, req);
      if (solution_to_json(a.solution) != solution_to_json(c.solution)) {
        out_detail = std::string("jobs=2 solution differs for ") + algo;
        return false;
      }
    }
  }
  out_detail = "repeated and parallel runs identical on sampled instances";
  return true;
}

}  // namespace

int main() {
  const std::vector<Instance> corpus = build_corpus();

  struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "cover2 ratio <= (2+eps) * OPT",
       [&](std::string& d) { return check_ratio_criterion(corpus, "cover2", 2.0, d); }},
      {2, "sor7 (exact subroutine) ratio <= (3+eps) * OPT",
       [&](std::string& d) { return check_ratio_criterion(corpus, "sor7", 3.0, d); }},
      {3, "exact k-center radius <= largest oracle radius",
       [&](std::string& d) { return check_kcenter_lower_bound(corpus, d); }},
      {4, "residual k-center radius <= 2 * r*_{i+1}",
       [&](std::string& d) { return check_residual_radius_bound(corpus, d); }},
      {5, "counting equals naive recount",
       [&](std::string& d) { return check_counting_equivalence(d); }},
      {6, "profile stream dominates oracle radii",
       [&](std::string& d) { return check_profile_domination(corpus, d); }},
      {7, "all solutions verify feasible; verifier fuzz",
       [&](std::string& d) { return check_feasibility_and_fuzz(corpus, d); }},
      {8, "independent oracles agree",
       [&](std::string& d) { return check_oracle_cross_check(d); }},
      {9, "trivial endpoints return zero cost",
       [&](std::string& d) { return check_trivial_endpoints(d); }},
      {10, "determinism across repeats and thread counts",
       [&](std::string& d) { return check_determinism(corpus, d); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool passed = false;
    try {
      passed = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %2d: %s — %s\n", passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!passed) ++failures;
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
