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
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mdsqaoa/encodings.hpp"
#include "mdsqaoa/graph.hpp"
#include "mdsqaoa/hamiltonian.hpp"
#include "mdsqaoa/simulator.hpp"

namespace mdsqaoa {

enum class Method { Ours, Dinneen, Pan, Guerrero };
enum class AnsatzMode { Standard, MultiAngle };

std::string to_string(Method m);
std::string to_string(AnsatzMode m);
Method parse_method(std::string_view s);
AnsatzMode parse_mode(std::string_view s);

/// Register width a method simulates on g (Guerrero runs on the n vertex
/// qubits; its auxiliary-qubit bound is reported separately).
unsigned simulated_qubits(const Graph &g, Method m);

struct AnsatzConfig {
  Method method = Method::Ours;
  unsigned layers = 1;
  AnsatzMode mode = AnsatzMode::Standard;
  PenaltyConfig penalties;

  void validate() const;
};

/// Everything the variational loop needs for one (graph, method, penalties):
/// the Hamiltonian, its diagonal, and the success targets.
struct Problem {
  Graph graph;
  Method method = Method::Ours;
  PenaltyConfig penalties;
  std::optional<InstanceSpec> instance;
  std::uint64_t instance_seed = 0;

  unsigned num_qubits = 0;
  ZSum hamiltonian;
  DenseDiagonal diagonal;
  /// `diagonal` without the identity term. The phase layers use this one so
  /// that every ansatz and route agrees amplitude by amplitude, not just up to
  /// a global phase.
  DenseDiagonal phase_diagonal;
  /// Level table of `phase_diagonal` for the standard phase layer, when small.
  std::optional<DiagonalLevels> levels;
  MdsSolution mds;
  /// Register basis states that are ground states of the simulated
  /// Hamiltonian and project onto an optimal dominating set.
  std::vector<std::uint64_t> targets;
  /// Every register state whose vertex bits form an optimal dominating set,
  /// whatever the surplus bits. Equal to `targets` for the n-qubit methods.
  std::vector<std::uint64_t> projected_targets;
};

Problem compile_problem(const Graph &g, Method method,
                        const PenaltyConfig &penalties,
                        std::optional<InstanceSpec> instance = std::nullopt);

/// Angle counts per layer: one gamma and one beta (standard), or one gamma
/// per non-identity Hamiltonian term and one beta per qubit (multi-angle).
struct ParameterShape {
  AnsatzMode mode = AnsatzMode::Standard;
  unsigned layers = 0;
  std::size_t gammas_per_layer = 1;
  std::size_t betas_per_layer = 1;

  std::size_t per_layer() const { return gammas_per_layer + betas_per_layer; }
  std::size_t total() const { return layers * per_layer(); }
  friend bool operator==(const ParameterShape &, const ParameterShape &) = default;
};

ParameterShape parameter_shape(const Problem &problem, const AnsatzConfig &cfg);

/// Flat storage, layer-major: [gammas of layer 1, betas of layer 1, ...].
/// Phase angles live in [0, 2pi], mixer angles in [0, pi].
struct ParameterSet {
  ParameterShape shape;
  std::vector<double> values;

  static ParameterSet zeros(const ParameterShape &shape);
  static ParameterSet standard(std::span<const double> gammas,
                               std::span<const double> betas);

  std::span<const double> gammas(unsigned layer) const;
  std::span<const double> betas(unsigned layer) const;
  std::vector<double> lower_bounds() const;
  std::vector<double> upper_bounds() const;
};

/// Appends a layer with all angles zero; the circuit is unchanged.
ParameterSet pad_layer(const ParameterSet &p);
/// Multi-angle parameters with every angle of layer k tied to the standard
/// (gamma_k, beta_k).
ParameterSet tie_to_multi_angle(const ParameterSet &standard,
                                const ParameterShape &multi_angle_shape);

enum class PhaseRoute { Diagonal, Terms };

/// Final ansatz state prod_k U_M(beta_k) U_P(gamma_k) |+>^N. The diagonal
/// route exponentiates the dense diagonal; the term route applies one Z-string
/// rotation per Hamiltonian term.
StateVector prepare_state(const Problem &problem, const ParameterSet &params,
                          PhaseRoute route = PhaseRoute::Diagonal);

struct Evaluation {
  double expectation = 0.0;
  StateVector state;
};

Evaluation evaluate(const Problem &problem, const ParameterSet &params);
Evaluation evaluate(const Graph &g, const AnsatzConfig &cfg,
                    const ParameterSet &params);

/// Summed probability of the success targets.
double success_probability(const Problem &problem, const StateVector &state);

enum class OptimizerAlgorithm { NelderMead, GridThenNelderMead };

struct OptimizerConfig {
  OptimizerAlgorithm algorithm = OptimizerAlgorithm::NelderMead;
  std::size_t max_iters = 1000;
  /// Random starts; may be 0 when warm starts are supplied.
  unsigned restarts = 10;
  double ftol = 1e-6;
  std::uint64_t seed = 0;

  void validate() const;
};

struct RunRecord {
  std::optional<InstanceSpec> instance;
  std::uint64_t instance_seed = 0;
  unsigned num_vertices = 0;
  std::size_t num_edges = 0;
  bool has_isolated_vertices = false;
  AnsatzConfig config;
  OptimizerConfig optimizer;
  unsigned num_qubits = 0;

  ParameterSet best;
  double best_expectation = 0.0;
  double success_probability = 0.0;
  /// Probability mass on the optimal vertex assignments with the surplus
  /// bits marginalized out.
  double projected_success_probability = 0.0;
  unsigned mds_size = 0;
  std::size_t optima_count = 0;
  std::size_t target_count = 0;
  /// Index of the winning start (restarts first, then warm starts).
  std::size_t best_start = 0;
  std::size_t evaluations = 0;
  std::vector<double> trace;
  double wall_seconds = 0.0;
};

/// Best-of-restarts bounded Nelder-Mead. The start pool is `restarts`
/// uniform draws from the angle box (streams keyed on instance seed,
/// optimizer seed and restart index) followed by every warm start.
RunRecord optimize(const Problem &problem, const AnsatzConfig &cfg,
                   const OptimizerConfig &opt,
                   std::span<const ParameterSet> warm_starts = {});

nlohmann::json to_json(const InstanceSpec &spec);
nlohmann::json to_json(const RunRecord &r);
RunRecord run_record_from_json(const nlohmann::json &j);

} // namespace mdsqaoa
