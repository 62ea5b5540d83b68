// Copyright 2026 The mds-qaoa Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "mdsqaoa/experiments.hpp"

using namespace mdsqaoa;

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty())
      out.push_back(item);
  return out;
}

std::vector<unsigned> parse_sizes(const std::string &s) {
  std::vector<unsigned> out;
  for (const auto &t : split(s, ','))
    out.push_back(static_cast<unsigned>(std::stoul(t)));
  return out;
}

// "3", "1..7"
std::pair<unsigned, unsigned> parse_layers(const std::string &s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto p = static_cast<unsigned>(std::stoul(s));
    return {p, p};
  }
  return {static_cast<unsigned>(std::stoul(s.substr(0, dots))),
          static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
}

OptimizerAlgorithm parse_algorithm(const std::string &s) {
  if (s == "nm" || s == "nelder-mead")
    return OptimizerAlgorithm::NelderMead;
  if (s == "grid" || s == "grid-then-nelder-mead")
    return OptimizerAlgorithm::GridThenNelderMead;
  throw std::invalid_argument("unknown optimizer '" + s + "'");
}

struct SweepArgs {
  std::string families = "3reg,er";
  std::string sizes = "4,6,8";
  std::string methods = "ours";
  std::string modes = "standard";
  std::string layers = "1..7";
  unsigned instances = 0;
  double lambda = 2.0;
  double penalty = 2.0;
  unsigned restarts = 10;
  unsigned ma_restarts = 1;
  std::size_t max_iters = 1000;
  double ftol = 1e-6;
  std::string algorithm = "nm";
  double edge_prob = 0.5;
  std::uint64_t seed = 0;
  std::string out = "sweep-out";
  unsigned qubit_cap = 20;
  unsigned workers = 1;
};

int run_sweep_command(const SweepArgs &a) {
  SweepSpec spec;
  spec.families.clear();
  for (const auto &f : split(a.families, ','))
    spec.families.push_back(parse_family(f));
  spec.sizes = parse_sizes(a.sizes);
  spec.methods.clear();
  for (const auto &m : split(a.methods, ','))
    spec.methods.push_back(parse_method(m));
  spec.modes.clear();
  for (const auto &m : split(a.modes, ','))
    spec.modes.push_back(parse_mode(m));
  std::tie(spec.min_layer, spec.max_layer) = parse_layers(a.layers);
  if (a.instances > 0)
    spec.instances = a.instances;
  spec.penalties = {a.lambda, a.penalty};
  spec.optimizer.algorithm = parse_algorithm(a.algorithm);
  spec.optimizer.restarts = a.restarts;
  spec.optimizer.max_iters = a.max_iters;
  spec.optimizer.ftol = a.ftol;
  spec.optimizer.seed = a.seed;
  spec.multi_angle_restarts = a.ma_restarts;
  spec.edge_prob = a.edge_prob;
  spec.master_seed = a.seed;
  spec.qubit_cap = a.qubit_cap;
  spec.workers = a.workers;

  const SweepResult result = run_sweep(spec);
  emit_all(spec, result, a.out);
  std::cout << aggregates_csv(result.aggregates);
  std::cerr << result.runs.size() << " runs, " << result.skipped.size()
            << " skipped cells; outputs in " << a.out << "\n";
  return 0;
}

struct SolveArgs {
  std::string graph;
  std::string method = "ours";
  std::string mode = "standard";
  unsigned layers = 1;
  double lambda = 2.0;
  double penalty = 2.0;
  unsigned restarts = 10;
  std::size_t max_iters = 1000;
  double ftol = 1e-6;
  std::string algorithm = "nm";
  std::uint64_t seed = 0;
  std::string json_out;
  std::uint64_t shots = 0;
};

int run_solve_command(const SolveArgs &a) {
  const Graph g = load_graph(a.graph);
  const Method method = parse_method(a.method);
  const AnsatzMode mode = parse_mode(a.mode);
  const PenaltyConfig pen{a.lambda, a.penalty};
  const Problem problem = compile_problem(g, method, pen);
  OptimizerConfig opt;
  opt.algorithm = parse_algorithm(a.algorithm);
  opt.restarts = a.restarts;
  opt.max_iters = a.max_iters;
  opt.ftol = a.ftol;
  opt.seed = a.seed;

  // Warm-started chain over p, as in the sweep.
  std::optional<ParameterSet> prev_std, prev_ma;
  RunRecord last;
  for (unsigned p = 1; p <= a.layers; ++p) {
    AnsatzConfig cfg{method, p, AnsatzMode::Standard, pen};
    std::vector<ParameterSet> warm;
    if (prev_std)
      warm.push_back(pad_layer(*prev_std));
    last = optimize(problem, cfg, opt, warm);
    prev_std = last.best;
    if (mode == AnsatzMode::MultiAngle) {
      cfg.mode = AnsatzMode::MultiAngle;
      std::vector<ParameterSet> mwarm{
          tie_to_multi_angle(last.best, parameter_shape(problem, cfg))};
      if (prev_ma)
        mwarm.push_back(pad_layer(*prev_ma));
      OptimizerConfig mopt = opt;
      mopt.restarts = 1;
      last = optimize(problem, cfg, mopt, mwarm);
      prev_ma = last.best;
    }
    std::printf("p=%u  F=%.10g  P_suc=%.6f  projected=%.6f\n", p,
                last.best_expectation, last.success_probability,
                last.projected_success_probability);
  }
  std::printf("qubits=%u  mds_size=%u  optima=%zu  targets=%zu\n",
              last.num_qubits, last.mds_size, last.optima_count,
              last.target_count);
  if (a.shots > 0) {
    const auto state = evaluate(problem, last.best).state;
    const auto hist = sample(state, a.shots, a.seed);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> top(hist.begin(),
                                                             hist.end());
    std::sort(top.begin(), top.end(), [](const auto &x, const auto &y) {
      return x.second != y.second ? x.second > y.second : x.first < y.first;
    });
    for (std::size_t i = 0; i < std::min<std::size_t>(top.size(), 8); ++i)
      std::printf("  %s  %llu%s\n",
                  Bitstring(top[i].first, problem.num_qubits).str().c_str(),
                  static_cast<unsigned long long>(top[i].second),
                  std::binary_search(problem.targets.begin(),
                                     problem.targets.end(), top[i].first)
                      ? "  optimal"
                      : "");
  }
  if (!a.json_out.empty())
    write_text_file(a.json_out, to_json(last).dump(1) + "\n");
  return 0;
}

int run_resources_command(const std::string &path, double lambda,
                          double penalty) {
  const Graph g = load_graph(path);
  const auto c = qubit_counts(g);
  std::printf("n=%u edges=%zu\n", g.num_vertices(), g.num_edges());
  std::printf("%-10s %7s %7s %7s\n", "method", "qubits", "rz", "cnot");
  auto row = [](const char *name, unsigned q, const ZSum &h) {
    const auto e = gate_estimate(h);
    std::printf("%-10s %7u %7zu %7zu\n", name, q, e.rz_count, e.cnot_count);
  };
  row("ours", c.ours, build_ours(g, lambda));
  row("dinneen", c.dinneen, build_qubo(g, dinneen_layout(g), penalty));
  row("pan", c.pan, build_qubo(g, pan_layout(g), penalty));
  std::printf("%-10s %7u %7s %7s\n", "guerrero", c.guerrero_bound, "-", "-");
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Minimum dominating set with QAOA: encodings, simulation and "
               "sweeps"};
  app.require_subcommand(1);

  SweepArgs sw;
  auto *sweep = app.add_subcommand("sweep", "Run a method x layer sweep");
  sweep->add_option("--families", sw.families, "3reg,er")->capture_default_str();
  sweep->add_option("--sizes", sw.sizes, "Vertex counts")->capture_default_str();
  sweep->add_option("--methods", sw.methods, "ours,dinneen,pan,guerrero")
      ->capture_default_str();
  sweep->add_option("--modes", sw.modes, "standard,multiangle")
      ->capture_default_str();
  sweep->add_option("--layers", sw.layers, "Layer range, e.g. 1..7")
      ->capture_default_str();
  sweep->add_option("--instances", sw.instances,
                    "Instances per cell (0: 10 for ER n=4, else 20)");
  sweep->add_option("--lambda", sw.lambda)->capture_default_str();
  sweep->add_option("--penalty", sw.penalty)->capture_default_str();
  sweep->add_option("--restarts", sw.restarts)->capture_default_str();
  sweep->add_option("--ma-restarts", sw.ma_restarts,
                    "Random starts for multi-angle runs")
      ->capture_default_str();
  sweep->add_option("--max-iters", sw.max_iters)->capture_default_str();
  sweep->add_option("--ftol", sw.ftol)->capture_default_str();
  sweep->add_option("--optimizer", sw.algorithm, "nm or grid")
      ->capture_default_str();
  sweep->add_option("--edge-prob", sw.edge_prob)->capture_default_str();
  sweep->add_option("--seed", sw.seed)->capture_default_str();
  sweep->add_option("--out", sw.out)->capture_default_str();
  sweep->add_option("--qubit-cap", sw.qubit_cap)->capture_default_str();
  sweep->add_option("--workers", sw.workers)->capture_default_str();

  SolveArgs so;
  auto *solve = app.add_subcommand("solve", "Optimize one graph");
  solve->add_option("graph", so.graph, "Graph JSON {\"n\":..,\"edges\":[[u,v],..]}")
      ->required();
  solve->add_option("--method", so.method)->capture_default_str();
  solve->add_option("--mode", so.mode)->capture_default_str();
  solve->add_option("-p,--layers", so.layers)->capture_default_str();
  solve->add_option("--lambda", so.lambda)->capture_default_str();
  solve->add_option("--penalty", so.penalty)->capture_default_str();
  solve->add_option("--restarts", so.restarts)->capture_default_str();
  solve->add_option("--max-iters", so.max_iters)->capture_default_str();
  solve->add_option("--ftol", so.ftol)->capture_default_str();
  solve->add_option("--optimizer", so.algorithm)->capture_default_str();
  solve->add_option("--seed", so.seed)->capture_default_str();
  solve->add_option("--json", so.json_out, "Write the final RunRecord here");
  solve->add_option("--shots", so.shots, "Sample the final state");

  std::string res_graph;
  double res_lambda = 2.0, res_penalty = 2.0;
  auto *resources =
      app.add_subcommand("resources", "Qubit and gate counts for one graph");
  resources->add_option("graph", res_graph)->required();
  resources->add_option("--lambda", res_lambda)->capture_default_str();
  resources->add_option("--penalty", res_penalty)->capture_default_str();

  std::string gen_family = "3reg", gen_out;
  unsigned gen_n = 6;
  std::uint64_t gen_seed = 0;
  double gen_p = 0.5;
  auto *gen = app.add_subcommand("generate", "Write a random graph as JSON");
  gen->add_option("--family", gen_family)->capture_default_str();
  gen->add_option("-n", gen_n)->capture_default_str();
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("--edge-prob", gen_p)->capture_default_str();
  gen->add_option("--out", gen_out, "Output path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep)
      return run_sweep_command(sw);
    if (*solve)
      return run_solve_command(so);
    if (*resources)
      return run_resources_command(res_graph, res_lambda, res_penalty);
    if (*gen) {
      const Graph g = generate({parse_family(gen_family), gen_n, gen_p, gen_seed});
      if (gen_out.empty())
        std::cout << to_json(g).dump() << "\n";
      else
        save_graph(g, gen_out);
      return 0;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
