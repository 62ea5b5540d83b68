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
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mdsqaoa/qaoa.hpp"

namespace mdsqaoa {

struct SweepSpec {
  std::vector<GraphFamily> families{GraphFamily::ThreeRegular,
                                    GraphFamily::ErdosRenyi};
  std::vector<unsigned> sizes{4, 6, 8};
  /// Instances per (family, n); unset means default_instances().
  std::optional<unsigned> instances;
  std::vector<Method> methods{Method::Ours};
  std::vector<AnsatzMode> modes{AnsatzMode::Standard};
  unsigned min_layer = 1;
  unsigned max_layer = 7;
  double edge_prob = 0.5;
  PenaltyConfig penalties;
  OptimizerConfig optimizer;
  /// Random starts for multi-angle runs. The tied standard solution at the
  /// same p and the padded multi-angle solution from p - 1 are always added.
  unsigned multi_angle_restarts = 1;
  std::uint64_t master_seed = 0;
  unsigned qubit_cap = 20;
  unsigned workers = 1;

  void validate() const;
};

/// 10 for 4-vertex Erdos-Renyi, 20 otherwise.
unsigned default_instances(GraphFamily family, unsigned n);

/// Keyed on (master seed, family, n, index) only, so the graphs of a cell do
/// not change when methods or modes are added.
std::uint64_t instance_seed(std::uint64_t master_seed, GraphFamily family,
                            unsigned n, unsigned index);

struct SweepRun {
  GraphFamily family;
  unsigned n = 0;
  unsigned instance_index = 0;
  RunRecord record;
};

struct SkippedCell {
  GraphFamily family;
  unsigned n = 0;
  unsigned instance_index = 0;
  std::uint64_t instance_seed = 0;
  Method method = Method::Ours;
  AnsatzMode mode = AnsatzMode::Standard;
  unsigned layers = 0;
  /// "qubit_cap" or "generation_failed".
  std::string reason;
  std::string detail;
  unsigned num_qubits = 0;
};

struct AggregateRow {
  GraphFamily family;
  unsigned n = 0;
  Method method = Method::Ours;
  AnsatzMode mode = AnsatzMode::Standard;
  unsigned layers = 0;
  double mean = 0.0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const AggregateRow &, const AggregateRow &) = default;
};

struct SweepResult {
  std::vector<SweepRun> runs;
  std::vector<SkippedCell> skipped;
  std::vector<AggregateRow> aggregates;
};

/// Runs every (instance, method, mode, p) cell. For each instance and
/// method the standard runs form a chain over p, each warm-started from the
/// previous layer's optimum; multi-angle runs start from the tied standard
/// optimum at the same p. Output order is fixed by the spec, not by thread
/// scheduling.
SweepResult run_sweep(const SweepSpec &spec);

/// Linear-interpolation quantile of sorted data, q in [0, 1].
double quantile(const std::vector<double> &sorted, double q);

/// Success-probability statistics per (family, n, method, mode, p), ordered
/// by first appearance in `runs`.
std::vector<AggregateRow> aggregate(const std::vector<SweepRun> &runs,
                                    std::uint64_t master_seed);

nlohmann::json to_json(const SweepRun &run);
SweepRun sweep_run_from_json(const nlohmann::json &j);
nlohmann::json to_json(const SkippedCell &cell);

/// family,n,method,mode,p,mean_psuc,median_psuc,q1,q3,count,seed
std::string aggregates_csv(const std::vector<AggregateRow> &rows);

struct QubitRow {
  std::string label;
  unsigned n = 0;
  std::size_t edges = 0;
  QubitCounts counts;
};

/// label,n,edges,ours,dinneen,pan,guerrero_bound
std::string qubit_table_csv(const std::vector<QubitRow> &rows);
/// One row per generated instance of the spec's (family, n) cells.
std::vector<QubitRow> qubit_table(const SweepSpec &spec);

/// Mean success probability against p, one line per (method, mode).
std::string svg_lines(const std::vector<AggregateRow> &rows, GraphFamily family,
                      unsigned n);
/// Per-layer box plots, one box per (method, mode), whiskers at 1.5 IQR and
/// outliers not drawn.
std::string svg_box(const std::vector<SweepRun> &runs, GraphFamily family,
                    unsigned n);

/// Writes `text` to `path`, creating parent directories. Throws
/// std::runtime_error naming the path on failure.
void write_text_file(const std::string &path, const std::string &text);

/// aggregates.csv, runs.json, skipped.json, qubits.csv and one lines_ and
/// box_ SVG per (family, n) with results, under `dir`.
void emit_all(const SweepSpec &spec, const SweepResult &result,
              const std::string &dir);

} // namespace mdsqaoa
