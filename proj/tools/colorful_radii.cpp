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

// colorful-radii: generate, solve, verify, and benchmark colorful
// sum-of-radii instances.
//
//   colorful-radii gen    --n 10 --omega 2 --k 2 --m 1,1 --seed 7 --out inst.json
//   colorful-radii solve  --in inst.json --algo cover2 --epsilon 0.5 --out sol.json
//   colorful-radii verify --in inst.json --solution sol.json --against-oracle --bound 2.5
//   colorful-radii bench  --corpus dir/ --algos cover2,sor7-exact,oracle --eps 0.5,1 --out out.csv

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumradii/driver.hpp"
#include "sumradii/generate.hpp"
#include "sumradii/io.hpp"
#include "sumradii/log.hpp"
#include "sumradii/oracle.hpp"

namespace {

using namespace sumradii;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct BenchAlgo {
  std::string name;      // row label: cover2 | sor7-exact | sor7-greedy | oracle
  std::string algo;      // driver algo
  KCenterMode kcenter = KCenterMode::kExact;
  bool needs_epsilon = true;
};

BenchAlgo resolve_bench_algo(const std::string& name) {
  if (name == "cover2") return {name, "cover2", KCenterMode::kExact, true};
  if (name == "sor7" || name == "sor7-exact") return {name, "sor7", KCenterMode::kExact, true};
  if (name == "sor7-greedy") return {name, "sor7", KCenterMode::kGreedy, true};
  if (name == "oracle") return {name, "oracle", KCenterMode::kExact, false};
  if (name == "kcenter-exact") return {name, "kcenter-exact", KCenterMode::kExact, false};
  if (name == "kcenter-greedy") return {name, "kcenter-greedy", KCenterMode::kGreedy, false};
  throw std::invalid_argument("unknown bench algorithm: " + name);
}

int run_gen(const std::string& out_path, GeneratorSpec spec, const std::string& mode,
            const std::string& budgets) {
  spec.budgets = parse_int_list(budgets);
  if (mode == "uniform") {
    spec.mode = GenMode::kUniform;
  } else if (mode == "planted") {
    spec.mode = GenMode::kPlanted;
  } else {
    throw std::invalid_argument("mode must be uniform or planted");
  }
  const Instance inst = generate(spec);
  save_instance(out_path, inst);
  log_info("wrote " + out_path + " digest=" + instance_digest(inst));
  return 0;
}

int run_solve(const std::string& in_path, const std::string& out_path, AlgoRequest req,
              const std::string& kcenter, bool skip_triangle_check) {
  if (kcenter == "exact") {
    req.kcenter = KCenterMode::kExact;
  } else if (kcenter == "greedy") {
    req.kcenter = KCenterMode::kGreedy;
  } else {
    throw std::invalid_argument("--kcenter must be exact or greedy");
  }
  ValidationOptions vopts;
  vopts.check_triangle = !skip_triangle_check;
  const Instance inst = load_instance(in_path, vopts);
  const RunOutcome out = run_algorithm(inst, req);
  if (!out_path.empty()) save_solution(out_path, out.solution);
  std::cout << report_to_json(out.report).dump() << "\n";
  return out.report.feasible ? 0 : 2;
}

int run_verify(const std::string& in_path, const std::string& sol_path, bool against_oracle,
               double bound, bool skip_triangle_check) {
  ValidationOptions vopts;
  vopts.check_triangle = !skip_triangle_check;
  const Instance inst = load_instance(in_path, vopts);
  const Solution sol = load_solution(sol_path, inst);
  const FeasibilityReport rep = verify_solution(inst, sol);
  nlohmann::json j;
  j["feasible"] = rep.feasible;
  j["cost"] = rep.cost;
  j["cluster_balls"] = rep.cluster_balls;
  j["covered"] = rep.covered;
  j["outliers"] = rep.outliers;
  bool pass = rep.feasible;
  if (against_oracle) {
    const RatioReport ratio = verify_ratio(inst, sol, bound);
    j["opt"] = ratio.opt;
    j["ratio"] = ratio.ratio;
    j["bound"] = ratio.bound;
    j["pass"] = ratio.pass;
    pass = ratio.pass;
  }
  std::cout << j.dump() << "\n";
  return pass ? 0 : 2;
}

int run_bench(const std::string& corpus_dir, const std::string& algos_text,
              const std::string& eps_text, const std::string& out_path, bool with_oracle,
              std::uint64_t node_budget, int jobs) {
  std::vector<BenchAlgo> algos;
  for (const std::string& name : parse_string_list(algos_text))
    algos.push_back(resolve_bench_algo(name));
  std::vector<double> eps_list = parse_double_list(eps_text);
  if (eps_list.empty()) eps_list.push_back(1.0);

  std::vector<std::filesystem::path> files;
  if (std::filesystem::exists(corpus_dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "instance,algo,epsilon,cost,opt,ratio,guarantee,violated,time_ms,nodes,status\n";
  bool any_violation = false;
  for (const auto& file : files) {
    std::optional<Instance> inst;
    try {
      inst = load_instance(file.string());
    } catch (const std::exception& e) {
      log_warn("skipping " + file.string() + ": " + e.what());
      csv << file.filename().string() << ",,,,,,,,,,PARSE_ERROR\n";
      continue;
    }
    std::optional<double> opt;
    bool oracle_skipped = false;
    if (with_oracle) {
      try {
        opt = solve_exact_sor(*inst).opt_cost;
      } catch (const OracleCapExceeded&) {
        oracle_skipped = true;
      }
    }
    for (const BenchAlgo& algo : algos) {
      for (double eps : eps_list) {
        if (with_oracle && oracle_skipped) {
          csv << file.filename().string() << "," << algo.name << ","
              << (algo.needs_epsilon ? format_double(eps) : "") << ",,,,,,,,SKIPPED\n";
          continue;
        }
        AlgoRequest req;
        req.algo = algo.algo;
        req.epsilon = eps;
        req.kcenter = algo.kcenter;
        req.node_budget = node_budget;
        req.jobs = jobs;
        const RunOutcome out = run_algorithm(*inst, req);
        std::string ratio_text;
        std::string violated_text;
        bool violated = !out.report.feasible;
        if (opt) {
          const double ratio =
              *opt > 0 ? out.report.cost / *opt : (out.report.cost <= 1e-9 ? 1.0 : -1.0);
          ratio_text = format_double(ratio);
          if (out.report.guarantee)
            violated = violated || out.report.cost > *out.report.guarantee * *opt + 1e-9;
        }
        violated_text = violated ? "yes" : "no";
        any_violation = any_violation || violated;
        csv << file.filename().string() << "," << algo.name << ","
            << (algo.needs_epsilon ? format_double(eps) : "") << ","
            << format_double(out.report.cost) << "," << (opt ? format_double(*opt) : "") << ","
            << ratio_text << ","
            << (out.report.guarantee ? format_double(*out.report.guarantee) : "VOID") << ","
            << violated_text << "," << format_double(out.report.wall_ms) << ","
            << out.report.nodes << ",OK\n";
        if (!algo.needs_epsilon) break;  // one row per instance for eps-free algos
      }
    }
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << csv.str();
  }
  return any_violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colorful sum-of-radii clustering solvers"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  GeneratorSpec spec;
  std::string gen_mode = "uniform";
  std::string gen_budgets = "1,1";
  std::string gen_out = "instance.json";
  gen->add_option("--n", spec.n, "number of points");
  gen->add_option("--omega", spec.omega, "number of classes");
  gen->add_option("--k", spec.k, "number of clusters");
  gen->add_option("--m", gen_budgets, "per-class outlier budgets, comma separated");
  gen->add_option("--dim", spec.dim, "coordinate dimension");
  gen->add_option("--mode", gen_mode, "uniform | planted");
  gen->add_option("--clusters", spec.planted_clusters, "planted cluster count");
  gen->add_option("--spread", spec.spread, "planted cluster spread");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("--out", gen_out, "output instance path");

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance and print a report line");
  std::string solve_in;
  std::string solve_out;
  std::string solve_kcenter = "exact";
  bool solve_skip_triangle = false;
  AlgoRequest req;
  req.jobs = detail::default_jobs();
  solve->add_option("--in", solve_in, "instance file")->required();
  solve->add_option("--algo", req.algo,
                    "cover2 | sor7 | oracle | kcenter-exact | kcenter-greedy");
  solve->add_option("--epsilon", req.epsilon, "approximation slack");
  solve->add_option("--kcenter", solve_kcenter, "sor7 subroutine: exact | greedy");
  solve->add_option("--node-budget", req.node_budget, "search node budget (hard error)");
  solve->add_option("--jobs", req.jobs, "worker threads");
  std::uint64_t seed_opt = 0;
  auto* seed_flag = solve->add_option("--seed", seed_opt, "seed recorded in the report");
  solve->add_option("--out", solve_out, "write the solution file here");
  solve->add_flag("--skip-triangle-check", solve_skip_triangle,
                  "skip the O(n^3) metric check on load");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a solution file");
  std::string verify_in;
  std::string verify_sol;
  bool against_oracle = false;
  bool verify_skip_triangle = false;
  double verify_bound = 1.0;
  verify->add_option("--in", verify_in, "instance file")->required();
  verify->add_option("--solution", verify_sol, "solution file")->required();
  verify->add_flag("--against-oracle", against_oracle, "also compare with the exact oracle");
  verify->add_option("--bound", verify_bound, "ratio bound checked with --against-oracle");
  verify->add_flag("--skip-triangle-check", verify_skip_triangle,
                   "skip the O(n^3) metric check on load");

  // bench
  auto* bench = app.add_subcommand("bench", "run a corpus and emit a CSV summary");
  std::string bench_corpus;
  std::string bench_algos = "cover2,sor7-exact,oracle";
  std::string bench_eps = "0.5,1";
  std::string bench_out;
  bool bench_with_oracle = true;
  std::uint64_t bench_budget = 200'000'000;
  int bench_jobs = detail::default_jobs();
  bench->add_option("--corpus", bench_corpus, "directory of instance .json files")->required();
  bench->add_option("--algos", bench_algos, "comma separated algorithm list");
  bench->add_option("--eps", bench_eps, "comma separated epsilon list");
  bench->add_option("--out", bench_out, "CSV output path (stdout when omitted)");
  bench->add_flag("--with-oracle,!--no-oracle", bench_with_oracle,
                  "compute OPT and ratios via the exact oracle");
  bench->add_option("--node-budget", bench_budget, "search node budget");
  bench->add_option("--jobs", bench_jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_out, spec, gen_mode, gen_budgets);
    if (solve->parsed()) {
      if (seed_flag->count() > 0) req.seed = seed_opt;
      return run_solve(solve_in, solve_out, req, solve_kcenter, solve_skip_triangle);
    }
    if (verify->parsed())
      return run_verify(verify_in, verify_sol, against_oracle, verify_bound,
                        verify_skip_triangle);
    if (bench->parsed())
      return run_bench(bench_corpus, bench_algos, bench_eps, bench_out, bench_with_oracle,
                       bench_budget, bench_jobs);
  } catch (const std::exception& e) {
    log_error(e.what());
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
