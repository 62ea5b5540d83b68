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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "mdsqaoa/qaoa.hpp"
#include "oracles.hpp"

using namespace mdsqaoa;

namespace {

ParameterSet random_standard(unsigned p, Rng &rng) {
  std::vector<double> g(p), b(p);
  for (unsigned k = 0; k < p; ++k) {
    g[k] = rng.uniform(0.0, 2 * std::numbers::pi);
    b[k] = rng.uniform(0.0, std::numbers::pi);
  }
  return ParameterSet::standard(g, b);
}

OptimizerConfig quick(unsigned restarts = 3) {
  OptimizerConfig o;
  o.restarts = restarts;
  o.max_iters = 300;
  return o;
}

} // namespace

TEST_CASE("names parse back") {
  for (auto m : {Method::Ours, Method::Dinneen, Method::Pan, Method::Guerrero})
    CHECK(parse_method(to_string(m)) == m);
  for (auto m : {AnsatzMode::Standard, AnsatzMode::MultiAngle})
    CHECK(parse_mode(to_string(m)) == m);
  CHECK_THROWS_AS(parse_method("qubo"), std::invalid_argument);
  CHECK(parse_mode("ma") == AnsatzMode::MultiAngle);
  CHECK_THROWS_AS(parse_mode("multi"), std::invalid_argument);
  CHECK_THROWS_AS((AnsatzConfig{Method::Ours, 0}.validate()),
                  std::invalid_argument);
}

TEST_CASE("compiled problems") {
  const Graph k4 = complete_graph(4);
  const auto ours = compile_problem(k4, Method::Ours, {});
  CHECK(ours.num_qubits == 4);
  CHECK(ours.targets == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(ours.levels.has_value());

  const auto pan = compile_problem(k4, Method::Pan, {});
  CHECK(pan.num_qubits == 12);
  // Each target's vertex bits form an optimum and its energy is the ground.
  for (auto z : pan.targets) {
    CHECK(std::popcount(z & 0xF) == 1);
    CHECK(pan.diagonal[z] == doctest::Approx(1.0));
  }
  CHECK(pan.projected_targets.size() == 4 * 256);
  CHECK(pan.targets.size() < pan.projected_targets.size());

  CHECK(simulated_qubits(k4, Method::Guerrero) == 4);
  CHECK(simulated_qubits(k4, Method::Dinneen) == 12);
  CHECK_THROWS_AS(
      compile_problem(generate({GraphFamily::ThreeRegular, 10, 0.5, 0}),
                      Method::Dinneen, {}),
      std::invalid_argument);
}

TEST_CASE("ground energy equals the optimum's cost") {
  for (std::uint64_t s = 0; s < 5; ++s)
    for (unsigned n : {4U, 6U, 8U}) {
      const Graph g = generate({GraphFamily::ErdosRenyi, n, 0.5, s});
      const auto mds = brute_force_mds(g);
      const auto ours = compile_problem(g, Method::Ours, {});
      CHECK(ours.diagonal.min() ==
            doctest::Approx(cost_ours(g, mds.optima[0], 2.0)));
      const auto guer = compile_problem(g, Method::Guerrero, {});
      CHECK(guer.diagonal.min() ==
            doctest::Approx(-cost_guerrero(g, mds.optima[0])));
      for (auto m : {Method::Dinneen, Method::Pan}) {
        if (simulated_qubits(g, m) > 18)
          continue;
        const auto q = compile_problem(g, m, {});
        CHECK(q.diagonal.min() == doctest::Approx(double(mds.size)));
      }
    }
}

TEST_CASE("parameter shapes") {
  const auto pr = compile_problem(path_graph(3), Method::Ours, {});
  const auto std3 = parameter_shape(pr, {Method::Ours, 3});
  CHECK(std3.total() == 6);
  const auto ma = parameter_shape(pr, {Method::Ours, 2, AnsatzMode::MultiAngle});
  CHECK(ma.gammas_per_layer == pr.hamiltonian.num_non_identity());
  CHECK(ma.betas_per_layer == 3);
  CHECK(ma.total() == 2 * (ma.gammas_per_layer + 3));

  const auto z = ParameterSet::zeros(ma);
  const auto ub = z.upper_bounds();
  CHECK(ub[0] == doctest::Approx(2 * std::numbers::pi));
  CHECK(ub[ma.gammas_per_layer] == doctest::Approx(std::numbers::pi));

  // A standard vector cannot drive a multi-angle problem shape and so on.
  ParameterSet bad = ParameterSet::zeros(std3);
  bad.values.pop_back();
  CHECK_THROWS_AS(evaluate(pr, bad), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(path_graph(3), {Method::Ours, 2},
                           ParameterSet::zeros(std3)),
                  std::invalid_argument);
}

TEST_CASE("evaluate at zero parameters") {
  const Graph k4 = complete_graph(4);
  const auto pr = compile_problem(k4, Method::Ours, {});
  const auto e = evaluate(pr, ParameterSet::zeros(parameter_shape(pr, {Method::Ours, 2})));
  CHECK(e.expectation == doctest::Approx(pr.diagonal.mean()));
  CHECK(max_amplitude_distance(e.state, plus_state(4)) == 0.0);
  CHECK(success_probability(pr, e.state) == 0.25);

  const auto iso = compile_problem(empty_graph(1), Method::Pan, {});
  const auto ei = evaluate(iso, ParameterSet::zeros(parameter_shape(iso, {Method::Pan, 1})));
  CHECK(success_probability(iso, ei.state) == doctest::Approx(0.5));

  CHECK(success_probability(pr, StateVector::basis(4, 2)) == 1.0);
  CHECK_THROWS_AS(success_probability(pr, plus_state(3)), std::invalid_argument);
}

TEST_CASE("p = 1 expectation matches the dense-matrix oracle") {
  const Graph k4 = complete_graph(4);
  const auto pr = compile_problem(k4, Method::Ours, {});
  const auto diag = oracle::dense(pr.hamiltonian, 4);
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto params = random_standard(1, rng);
    const double ref = oracle::qaoa_expectation(diag, 4, {params.values[0]},
                                                {params.values[1]});
    CHECK(evaluate(pr, params).expectation == doctest::Approx(ref).epsilon(1e-12));
  }
  const Graph star = star_graph(3);
  const auto ps = compile_problem(star, Method::Guerrero, {});
  const auto two = random_standard(2, rng);
  const double ref = oracle::qaoa_expectation(
      oracle::dense(ps.hamiltonian, 4), 4, {two.values[0], two.values[2]},
      {two.values[1], two.values[3]});
  CHECK(evaluate(ps, two).expectation == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("multi-angle with tied angles is the standard circuit") {
  Rng rng(11);
  for (auto m : {Method::Ours, Method::Guerrero, Method::Pan}) {
    const Graph g = generate({GraphFamily::ErdosRenyi, 5, 0.5, 2});
    if (simulated_qubits(g, m) > 14)
      continue;
    const auto pr = compile_problem(g, m, {});
    const auto std_params = random_standard(3, rng);
    const auto ma = tie_to_multi_angle(
        std_params, parameter_shape(pr, {m, 3, AnsatzMode::MultiAngle}));
    const auto a = prepare_state(pr, std_params);
    const auto b = prepare_state(pr, ma);
    const auto c = prepare_state(pr, ma, PhaseRoute::Terms);
    CHECK(max_amplitude_distance(a, b) < 1e-12);
    CHECK(max_amplitude_distance(a, c) < 1e-12);
  }
}

TEST_CASE("routes agree for every method") {
  Rng rng(5);
  const Graph g = path_graph(4);
  for (auto m : {Method::Ours, Method::Dinneen, Method::Pan, Method::Guerrero}) {
    const auto pr = compile_problem(g, m, {});
    const auto params = random_standard(2, rng);
    CHECK(max_amplitude_distance(prepare_state(pr, params),
                                 prepare_state(pr, params, PhaseRoute::Terms)) <
          1e-10);
  }
}

TEST_CASE("pad_layer keeps the circuit") {
  const auto pr = compile_problem(cycle_graph(5), Method::Ours, {});
  Rng rng(2);
  const auto p2 = random_standard(2, rng);
  const auto p3 = pad_layer(p2);
  CHECK(p3.shape.layers == 3);
  CHECK(evaluate(pr, p3).expectation ==
        doctest::Approx(evaluate(pr, p2).expectation).epsilon(1e-13));
}

TEST_CASE("optimize on K4") {
  const auto pr = compile_problem(complete_graph(4), Method::Ours, {});
  const auto r = optimize(pr, {Method::Ours, 1}, OptimizerConfig{});
  CHECK(r.success_probability > 0.25);
  CHECK(r.optima_count == 4);
  CHECK(r.num_qubits == 4);
  CHECK(r.trace.size() >= 1);
  CHECK(r.best_expectation ==
        doctest::Approx(evaluate(pr, r.best).expectation).epsilon(1e-9));
  CHECK(r.best_expectation <= pr.diagonal.mean());
}

TEST_CASE("warm starts make the best value monotone in p") {
  const Graph g = generate({GraphFamily::ErdosRenyi, 6, 0.5, 9});
  for (auto m : {Method::Ours, Method::Guerrero}) {
    const auto pr = compile_problem(g, m, {});
    std::optional<ParameterSet> prev;
    double last = 0.0;
    for (unsigned p = 1; p <= 4; ++p) {
      std::vector<ParameterSet> warm;
      if (prev)
        warm.push_back(pad_layer(*prev));
      const auto r = optimize(pr, {m, p}, quick(), warm);
      if (prev)
        CHECK(r.best_expectation <= last + 1e-6);
      last = r.best_expectation;
      prev = r.best;
    }
  }
}

TEST_CASE("multi-angle seeded with the standard optimum is no worse") {
  const auto pr = compile_problem(cycle_graph(6), Method::Ours, {});
  const auto s = optimize(pr, {Method::Ours, 2}, quick());
  const AnsatzConfig mcfg{Method::Ours, 2, AnsatzMode::MultiAngle};
  const std::vector<ParameterSet> warm{
      tie_to_multi_angle(s.best, parameter_shape(pr, mcfg))};
  const auto m = optimize(pr, mcfg, quick(0), warm);
  CHECK(m.best_expectation <= s.best_expectation + 1e-12);
  CHECK(m.best_start == 0);
  CHECK_THROWS_AS(optimize(pr, mcfg, quick(0)), std::invalid_argument);
}

TEST_CASE("grid start") {
  const auto pr = compile_problem(path_graph(4), Method::Ours, {});
  OptimizerConfig o = quick(2);
  o.algorithm = OptimizerAlgorithm::GridThenNelderMead;
  const auto r = optimize(pr, {Method::Ours, 2}, o);
  CHECK(r.best_expectation <= pr.diagonal.mean());
}

TEST_CASE("optimize is deterministic and seed-dependent") {
  const InstanceSpec spec{GraphFamily::ErdosRenyi, 5, 0.5, 77};
  const auto pr = compile_problem(generate(spec), Method::Ours, {}, spec);
  const auto a = optimize(pr, {Method::Ours, 2}, quick());
  const auto b = optimize(pr, {Method::Ours, 2}, quick());
  CHECK(a.best.values == b.best.values);
  CHECK(a.trace == b.trace);
  CHECK(a.evaluations == b.evaluations);
  OptimizerConfig other = quick();
  other.seed = 1;
  const auto c = optimize(pr, {Method::Ours, 2}, other);
  CHECK(c.best.values != a.best.values);
}

TEST_CASE("run record JSON round trip") {
  const InstanceSpec spec{GraphFamily::ThreeRegular, 6, 0.5, 5};
  const auto pr = compile_problem(generate(spec), Method::Ours, {}, spec);
  const auto r = optimize(pr, {Method::Ours, 2}, quick(2));
  const auto j = to_json(r);
  CHECK(j["method"] == "ours");
  CHECK(j["instance"]["family"] == "3reg");
  const auto back = run_record_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.best.values == r.best.values);
  CHECK(back.best.shape == r.best.shape);
  CHECK(back.success_probability == r.success_probability);
  CHECK(back.trace == r.trace);
  CHECK(back.instance->seed == 5);
  CHECK(to_json(back) == j);
}
