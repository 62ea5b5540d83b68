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
#include "mdsqaoa/qaoa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mdsqaoa/nelder_mead.hpp"
#include "mdsqaoa/random.hpp"

namespace mdsqaoa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGroundTolerance = 1e-9;

} // namespace

std::string to_string(Method m) {
  switch (m) {
  case Method::Ours:
    return "ours";
  case Method::Dinneen:
    return "dinneen";
  case Method::Pan:
    return "pan";
  case Method::Guerrero:
    return "guerrero";
  }
  return "?";
}

std::string to_string(AnsatzMode m) {
  return m == AnsatzMode::Standard ? "standard" : "multiangle";
}

Method parse_method(std::string_view s) {
  if (s == "ours")
    return Method::Ours;
  if (s == "dinneen")
    return Method::Dinneen;
  if (s == "pan")
    return Method::Pan;
  if (s == "guerrero")
    return Method::Guerrero;
  throw std::invalid_argument("unknown method: " + std::string(s));
}

AnsatzMode parse_mode(std::string_view s) {
  if (s == "standard")
    return AnsatzMode::Standard;
  if (s == "multiangle" || s == "multi-angle" || s == "ma")
    return AnsatzMode::MultiAngle;
  throw std::invalid_argument("unknown ansatz mode: " + std::string(s));
}

unsigned simulated_qubits(const Graph &g, Method m) {
  const auto counts = qubit_counts(g);
  switch (m) {
  case Method::Dinneen:
    return counts.dinneen;
  case Method::Pan:
    return counts.pan;
  default:
    return counts.ours;
  }
}

void AnsatzConfig::validate() const {
  if (layers < 1)
    throw std::invalid_argument("ansatz needs at least one layer");
  penalties.validate();
}

void OptimizerConfig::validate() const {
  if (max_iters < 1 || !(ftol > 0.0))
    throw std::invalid_argument(
        "optimizer config needs max_iters >= 1 and ftol > 0");
}

Problem compile_problem(const Graph &g, Method method,
                        const PenaltyConfig &penalties,
                        std::optional<InstanceSpec> instance) {
  penalties.validate();
  Problem pr;
  pr.graph = g;
  pr.method = method;
  pr.penalties = penalties;
  pr.instance = instance;
  pr.instance_seed = instance ? instance->seed : 0;
  pr.mds = brute_force_mds(g);

  switch (method) {
  case Method::Ours:
    pr.hamiltonian = build_ours(g, penalties.lambda);
    pr.num_qubits = g.num_vertices();
    break;
  case Method::Guerrero:
    pr.hamiltonian = build_guerrero(g);
    pr.num_qubits = g.num_vertices();
    break;
  case Method::Dinneen:
  case Method::Pan: {
    const auto layout = make_layout(
        g, method == Method::Dinneen ? QuboKind::Dinneen : QuboKind::Pan);
    pr.hamiltonian = build_qubo(g, layout, penalties.big_p);
    pr.num_qubits = layout.register_size();
    break;
  }
  }
  if (pr.num_qubits < 1 || pr.num_qubits > StateVector::kMaxQubits)
    throw std::invalid_argument("compile_problem: " +
                                std::to_string(pr.num_qubits) +
                                " qubits cannot be simulated");
  pr.diagonal = to_dense(pr.hamiltonian, pr.num_qubits);
  const std::vector<double> ones(pr.hamiltonian.num_non_identity(), 1.0);
  pr.phase_diagonal = to_dense_scaled(pr.hamiltonian, pr.num_qubits, ones);
  pr.levels = diagonal_levels(pr.phase_diagonal);

  if (pr.num_qubits == g.num_vertices()) {
    pr.targets = pr.mds.optima;
    pr.projected_targets = pr.mds.optima;
  } else {
    const std::uint64_t vertex_mask =
        (std::uint64_t{1} << g.num_vertices()) - 1;
    const double ground = pr.diagonal.min();
    for (std::uint64_t z = 0; z < pr.diagonal.size(); ++z) {
      if (!std::binary_search(pr.mds.optima.begin(), pr.mds.optima.end(),
                              z & vertex_mask))
        continue;
      pr.projected_targets.push_back(z);
      if (std::abs(pr.diagonal[z] - ground) <= kGroundTolerance)
        pr.targets.push_back(z);
    }
  }
  if (pr.targets.empty())
    throw std::runtime_error("compile_problem: no ground state of the " +
                             to_string(method) +
                             " Hamiltonian is an optimal dominating set");
  return pr;
}

ParameterShape parameter_shape(const Problem &problem, const AnsatzConfig &cfg) {
  cfg.validate();
  ParameterShape s;
  s.mode = cfg.mode;
  s.layers = cfg.layers;
  if (cfg.mode == AnsatzMode::MultiAngle) {
    s.gammas_per_layer = problem.hamiltonian.num_non_identity();
    s.betas_per_layer = problem.num_qubits;
  }
  return s;
}

ParameterSet ParameterSet::zeros(const ParameterShape &shape) {
  return {shape, std::vector<double>(shape.total(), 0.0)};
}

ParameterSet ParameterSet::standard(std::span<const double> gammas,
                                    std::span<const double> betas) {
  if (gammas.size() != betas.size() || gammas.empty())
    throw std::invalid_argument("ParameterSet::standard: need p gammas and p betas");
  ParameterSet p;
  p.shape = {AnsatzMode::Standard, static_cast<unsigned>(gammas.size()), 1, 1};
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    p.values.push_back(gammas[k]);
    p.values.push_back(betas[k]);
  }
  return p;
}

std::span<const double> ParameterSet::gammas(unsigned layer) const {
  return std::span<const double>(values).subspan(layer * shape.per_layer(),
                                                 shape.gammas_per_layer);
}

std::span<const double> ParameterSet::betas(unsigned layer) const {
  return std::span<const double>(values).subspan(
      layer * shape.per_layer() + shape.gammas_per_layer, shape.betas_per_layer);
}

std::vector<double> ParameterSet::lower_bounds() const {
  return std::vector<double>(shape.total(), 0.0);
}

std::vector<double> ParameterSet::upper_bounds() const {
  std::vector<double> ub;
  ub.reserve(shape.total());
  for (unsigned k = 0; k < shape.layers; ++k) {
    ub.insert(ub.end(), shape.gammas_per_layer, kTwoPi);
    ub.insert(ub.end(), shape.betas_per_layer, std::numbers::pi);
  }
  return ub;
}

ParameterSet pad_layer(const ParameterSet &p) {
  ParameterSet out = p;
  out.shape.layers += 1;
  out.values.resize(out.shape.total(), 0.0);
  return out;
}

ParameterSet tie_to_multi_angle(const ParameterSet &standard,
                                const ParameterShape &ma) {
  if (standard.shape.mode != AnsatzMode::Standard ||
      ma.mode != AnsatzMode::MultiAngle || standard.shape.layers != ma.layers)
    throw std::invalid_argument("tie_to_multi_angle: incompatible shapes");
  ParameterSet out = ParameterSet::zeros(ma);
  for (unsigned k = 0; k < ma.layers; ++k) {
    auto *layer = out.values.data() + k * ma.per_layer();
    std::fill_n(layer, ma.gammas_per_layer, standard.gammas(k)[0]);
    std::fill_n(layer + ma.gammas_per_layer, ma.betas_per_layer,
                standard.betas(k)[0]);
  }
  return out;
}

namespace {

void check_shape(const Problem &problem, const ParameterSet &params) {
  const auto &s = params.shape;
  if (params.values.size() != s.total())
    throw std::invalid_argument("parameter vector length does not match shape");
  const bool ok =
      s.mode == AnsatzMode::Standard
          ? (s.gammas_per_layer == 1 && s.betas_per_layer == 1)
          : (s.gammas_per_layer == problem.hamiltonian.num_non_identity() &&
             s.betas_per_layer == problem.num_qubits);
  if (!ok || s.layers < 1)
    throw std::invalid_argument("parameter shape inconsistent with the " +
                                to_string(s.mode) + " ansatz for this problem");
}

} // namespace

StateVector prepare_state(const Problem &problem, const ParameterSet &params,
                          PhaseRoute route) {
  check_shape(problem, params);
  const bool multi = params.shape.mode == AnsatzMode::MultiAngle;
  StateVector s = plus_state(problem.num_qubits);
  for (unsigned k = 0; k < params.shape.layers; ++k) {
    const auto gammas = params.gammas(k);
    if (route == PhaseRoute::Terms) {
      if (multi)
        apply_phase_terms(s, problem.hamiltonian, 0.0, gammas);
      else
        apply_phase_terms(s, problem.hamiltonian, gammas[0]);
    } else if (multi) {
      apply_phase_diagonal(
          s, to_dense_scaled(problem.hamiltonian, problem.num_qubits, gammas),
          1.0);
    } else if (problem.levels) {
      apply_phase_levels(s, *problem.levels, gammas[0]);
    } else {
      apply_phase_diagonal(s, problem.phase_diagonal, gammas[0]);
    }
    if (multi)
      apply_mixer(s, params.betas(k));
    else
      apply_mixer(s, params.betas(k)[0]);
  }
  return s;
}

Evaluation evaluate(const Problem &problem, const ParameterSet &params) {
  StateVector s = prepare_state(problem, params);
  const double f = expectation(s, problem.diagonal);
  return {f, std::move(s)};
}

Evaluation evaluate(const Graph &g, const AnsatzConfig &cfg,
                    const ParameterSet &params) {
  cfg.validate();
  const Problem pr = compile_problem(g, cfg.method, cfg.penalties);
  if (params.shape != parameter_shape(pr, cfg))
    throw std::invalid_argument("evaluate: parameters do not match config");
  return evaluate(pr, params);
}

double success_probability(const Problem &problem, const StateVector &state) {
  if (state.num_qubits() != problem.num_qubits)
    throw std::invalid_argument("success_probability: register size mismatch");
  return overlap_probability(state, problem.targets);
}

namespace {

ParameterSet random_start(const ParameterShape &shape, Rng &rng) {
  ParameterSet p = ParameterSet::zeros(shape);
  const auto ub = p.upper_bounds();
  for (std::size_t i = 0; i < p.values.size(); ++i)
    p.values[i] = rng.uniform(0.0, ub[i]);
  return p;
}

// Coarse scan over layer-uniform (gamma, beta); all layers share one pair.
ParameterSet grid_start(const Problem &problem, const ParameterShape &shape) {
  constexpr int kGammaSteps = 16;
  constexpr int kBetaSteps = 8;
  ParameterSet best;
  double best_f = 0.0;
  for (int i = 0; i < kGammaSteps; ++i)
    for (int j = 0; j < kBetaSteps; ++j) {
      const double g = kTwoPi * (i + 0.5) / kGammaSteps;
      const double b = std::numbers::pi * (j + 0.5) / kBetaSteps;
      std::vector<double> gs(shape.layers, g), bs(shape.layers, b);
      ParameterSet p = ParameterSet::standard(gs, bs);
      if (shape.mode == AnsatzMode::MultiAngle)
        p = tie_to_multi_angle(p, shape);
      const double f = evaluate(problem, p).expectation;
      if (best.values.empty() || f < best_f) {
        best = std::move(p);
        best_f = f;
      }
    }
  return best;
}

} // namespace

RunRecord optimize(const Problem &problem, const AnsatzConfig &cfg,
                   const OptimizerConfig &opt,
                   std::span<const ParameterSet> warm_starts) {
  opt.validate();
  if (cfg.method != problem.method)
    throw std::invalid_argument("optimize: config method differs from problem");
  const auto t0 = std::chrono::steady_clock::now();
  const ParameterShape shape = parameter_shape(problem, cfg);

  std::vector<ParameterSet> starts;
  for (unsigned r = 0; r < opt.restarts; ++r) {
    if (r == 0 && opt.algorithm == OptimizerAlgorithm::GridThenNelderMead) {
      starts.push_back(grid_start(problem, shape));
      continue;
    }
    Rng rng(derive_seed({problem.instance_seed, opt.seed, r}));
    starts.push_back(random_start(shape, rng));
  }
  for (const auto &w : warm_starts) {
    if (w.shape != shape)
      throw std::invalid_argument("optimize: warm start has the wrong shape");
    starts.push_back(w);
  }
  if (starts.empty())
    throw std::invalid_argument("optimize: no restarts and no warm starts");

  const auto lower = ParameterSet::zeros(shape).lower_bounds();
  const auto upper = ParameterSet::zeros(shape).upper_bounds();
  NelderMeadOptions nm;
  nm.max_iters = opt.max_iters;
  nm.ftol = opt.ftol;

  ParameterSet scratch = ParameterSet::zeros(shape);
  const Objective objective = [&](std::span<const double> x) {
    std::copy(x.begin(), x.end(), scratch.values.begin());
    const double f = evaluate(problem, scratch).expectation;
    if (!std::isfinite(f))
      throw std::runtime_error("optimize: non-finite expectation value");
    return f;
  };

  RunRecord rec;
  bool have = false;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    auto res = nelder_mead(objective, starts[i].values, lower, upper, nm);
    rec.evaluations += res.evaluations;
    if (!have || res.f < rec.best_expectation) {
      have = true;
      rec.best_expectation = res.f;
      rec.best = {shape, std::move(res.x)};
      rec.best_start = i;
      rec.trace = std::move(res.trace);
    }
  }

  const Evaluation final_eval = evaluate(problem, rec.best);
  rec.best_expectation = final_eval.expectation;
  rec.success_probability = success_probability(problem, final_eval.state);
  rec.projected_success_probability =
      overlap_probability(final_eval.state, problem.projected_targets);

  rec.instance = problem.instance;
  rec.instance_seed = problem.instance_seed;
  rec.num_vertices = problem.graph.num_vertices();
  rec.num_edges = problem.graph.num_edges();
  for (unsigned v = 0; v < problem.graph.num_vertices(); ++v)
    if (problem.graph.degree(v) == 0)
      rec.has_isolated_vertices = true;
  rec.config = cfg;
  rec.optimizer = opt;
  rec.num_qubits = problem.num_qubits;
  rec.mds_size = problem.mds.size;
  rec.optima_count = problem.mds.optima.size();
  rec.target_count = problem.targets.size();
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rec;
}

nlohmann::json to_json(const InstanceSpec &spec) {
  return {{"family", to_string(spec.family)},
          {"n", spec.n},
          {"edge_prob", spec.edge_prob},
          {"seed", spec.seed}};
}

namespace {

InstanceSpec instance_from_json(const nlohmann::json &j) {
  InstanceSpec s;
  s.family = parse_family(j.at("family").get<std::string>());
  s.n = j.at("n").get<unsigned>();
  s.edge_prob = j.at("edge_prob").get<double>();
  s.seed = j.at("seed").get<std::uint64_t>();
  return s;
}

std::string to_string(OptimizerAlgorithm a) {
  return a == OptimizerAlgorithm::NelderMead ? "nelder-mead"
                                             : "grid-then-nelder-mead";
}

} // namespace

nlohmann::json to_json(const RunRecord &r) {
  nlohmann::json j;
  j["instance"] = r.instance ? to_json(*r.instance) : nlohmann::json(nullptr);
  j["instance_seed"] = r.instance_seed;
  j["num_vertices"] = r.num_vertices;
  j["num_edges"] = r.num_edges;
  j["has_isolated_vertices"] = r.has_isolated_vertices;
  j["method"] = to_string(r.config.method);
  j["mode"] = to_string(r.config.mode);
  j["layers"] = r.config.layers;
  j["lambda"] = r.config.penalties.lambda;
  j["penalty"] = r.config.penalties.big_p;
  j["optimizer"] = {{"algorithm", to_string(r.optimizer.algorithm)},
                    {"max_iters", r.optimizer.max_iters},
                    {"restarts", r.optimizer.restarts},
                    {"ftol", r.optimizer.ftol},
                    {"seed", r.optimizer.seed}};
  j["num_qubits"] = r.num_qubits;
  j["gammas_per_layer"] = r.best.shape.gammas_per_layer;
  j["betas_per_layer"] = r.best.shape.betas_per_layer;
  j["parameters"] = r.best.values;
  j["expectation"] = r.best_expectation;
  j["success_probability"] = r.success_probability;
  j["projected_success_probability"] = r.projected_success_probability;
  j["mds_size"] = r.mds_size;
  j["optima_count"] = r.optima_count;
  j["target_count"] = r.target_count;
  j["best_start"] = r.best_start;
  j["evaluations"] = r.evaluations;
  j["trace"] = r.trace;
  j["wall_seconds"] = r.wall_seconds;
  return j;
}

RunRecord run_record_from_json(const nlohmann::json &j) {
  RunRecord r;
  if (!j.at("instance").is_null())
    r.instance = instance_from_json(j.at("instance"));
  r.instance_seed = j.at("instance_seed").get<std::uint64_t>();
  r.num_vertices = j.at("num_vertices").get<unsigned>();
  r.num_edges = j.at("num_edges").get<std::size_t>();
  r.has_isolated_vertices = j.at("has_isolated_vertices").get<bool>();
  r.config.method = parse_method(j.at("method").get<std::string>());
  r.config.mode = parse_mode(j.at("mode").get<std::string>());
  r.config.layers = j.at("layers").get<unsigned>();
  r.config.penalties.lambda = j.at("lambda").get<double>();
  r.config.penalties.big_p = j.at("penalty").get<double>();
  const auto &o = j.at("optimizer");
  r.optimizer.algorithm = o.at("algorithm").get<std::string>() == "nelder-mead"
                              ? OptimizerAlgorithm::NelderMead
                              : OptimizerAlgorithm::GridThenNelderMead;
  r.optimizer.max_iters = o.at("max_iters").get<std::size_t>();
  r.optimizer.restarts = o.at("restarts").get<unsigned>();
  r.optimizer.ftol = o.at("ftol").get<double>();
  r.optimizer.seed = o.at("seed").get<std::uint64_t>();
  r.num_qubits = j.at("num_qubits").get<unsigned>();
  r.best.shape = {r.config.mode, r.config.layers,
                  j.at("gammas_per_layer").get<std::size_t>(),
                  j.at("betas_per_layer").get<std::size_t>()};
  r.best.values = j.at("parameters").get<std::vector<double>>();
  r.best_expectation = j.at("expectation").get<double>();
  r.success_probability = j.at("success_probability").get<double>();
  r.projected_success_probability =
      j.at("projected_success_probability").get<double>();
  r.mds_size = j.at("mds_size").get<unsigned>();
  r.optima_count = j.at("optima_count").get<std::size_t>();
  r.target_count = j.at("target_count").get<std::size_t>();
  r.best_start = j.at("best_start").get<std::size_t>();
  r.evaluations = j.at("evaluations").get<std::size_t>();
  r.trace = j.at("trace").get<std::vector<double>>();
  r.wall_seconds = j.at("wall_seconds").get<double>();
  return r;
}

} // namespace mdsqaoa
