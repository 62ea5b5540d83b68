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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mdsqaoa/experiments.hpp"

using namespace mdsqaoa;

namespace {

SweepSpec small_spec() {
  SweepSpec s;
  s.families = {GraphFamily::ErdosRenyi};
  s.sizes = {4};
  s.instances = 3;
  s.max_layer = 2;
  s.modes = {AnsatzMode::Standard, AnsatzMode::MultiAngle};
  s.methods = {Method::Ours, Method::Guerrero};
  s.optimizer.restarts = 2;
  s.optimizer.max_iters = 200;
  s.master_seed = 4;
  return s;
}

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_of(const std::string &s, const std::string &needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos;
       pos = s.find(needle, pos + 1))
    ++n;
  return n;
}

} // namespace

TEST_CASE("spec validation and defaults") {
  CHECK(default_instances(GraphFamily::ErdosRenyi, 4) == 10);
  CHECK(default_instances(GraphFamily::ErdosRenyi, 6) == 20);
  CHECK(default_instances(GraphFamily::ThreeRegular, 4) == 20);
  SweepSpec s;
  CHECK_NOTHROW(s.validate());
  s.min_layer = 3;
  s.max_layer = 2;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.workers = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.sizes = {5};
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("instance seeds depend only on the cell key") {
  const auto a = instance_seed(0, GraphFamily::ThreeRegular, 6, 0);
  CHECK(a == instance_seed(0, GraphFamily::ThreeRegular, 6, 0));
  CHECK(a != instance_seed(0, GraphFamily::ThreeRegular, 6, 1));
  CHECK(a != instance_seed(0, GraphFamily::ErdosRenyi, 6, 0));
  CHECK(a != instance_seed(1, GraphFamily::ThreeRegular, 6, 0));
}

TEST_CASE("quantile") {
  const std::vector<double> v{1, 2, 3, 4};
  CHECK(quantile(v, 0.0) == 1.0);
  CHECK(quantile(v, 1.0) == 4.0);
  CHECK(quantile(v, 0.5) == doctest::Approx(2.5));
  CHECK(quantile(v, 0.25) == doctest::Approx(1.75));
  CHECK(quantile({7.0}, 0.75) == 7.0);
  CHECK_THROWS_AS(quantile({}, 0.5), std::invalid_argument);
}

TEST_CASE("K4 chain") {
  SweepSpec s;
  s.families = {GraphFamily::ThreeRegular};
  s.sizes = {4};
  s.instances = 1;
  s.max_layer = 3;
  const auto r = run_sweep(s);
  REQUIRE(r.runs.size() == 3);
  CHECK(r.skipped.empty());
  for (unsigned p = 1; p <= 3; ++p)
    CHECK(r.runs[p - 1].record.config.layers == p);
  CHECK(r.runs[1].record.best_expectation <=
        r.runs[0].record.best_expectation + 1e-9);
  CHECK(r.runs[2].record.best_expectation <=
        r.runs[1].record.best_expectation + 1e-9);
  REQUIRE(r.aggregates.size() == 3);
  CHECK(r.aggregates[0].count == 1);
  CHECK(r.aggregates[0].mean == r.runs[0].record.success_probability);
}

TEST_CASE("qubit cap skips a cell and records why") {
  SweepSpec s;
  s.families = {GraphFamily::ThreeRegular};
  s.sizes = {10};
  s.instances = 1;
  s.max_layer = 1;
  s.methods = {Method::Dinneen};
  const auto r = run_sweep(s);
  CHECK(r.runs.empty());
  REQUIRE(r.skipped.size() == 1);
  CHECK(r.skipped[0].reason == "qubit_cap");
  CHECK(r.skipped[0].num_qubits == 30);
  CHECK(to_json(r.skipped[0])["num_qubits"] == 30);
}

TEST_CASE("an empty method list gives empty outputs") {
  SweepSpec s = small_spec();
  s.methods.clear();
  const auto r = run_sweep(s);
  CHECK(r.runs.empty());
  CHECK(r.skipped.empty());
  CHECK(aggregates_csv(r.aggregates) ==
        "family,n,method,mode,p,mean_psuc,median_psuc,q1,q3,count,seed\n");
}

TEST_CASE("sweep outputs are reproducible and self-consistent") {
  const SweepSpec spec = small_spec();
  const auto a = run_sweep(spec);
  CHECK(a.runs.size() == 3 * 2 * 2 * 2);

  SweepSpec threaded = spec;
  threaded.workers = 2;
  const auto b = run_sweep(threaded);
  const std::string csv = aggregates_csv(a.aggregates);
  CHECK(csv == aggregates_csv(b.aggregates));

  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 10);
    ++rows;
  }
  CHECK(rows == 2 * 2 * 2);

  // Multi-angle starts from the tied standard optimum.
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    const auto &r = a.runs[i].record;
    if (r.config.mode != AnsatzMode::MultiAngle)
      continue;
    const auto it = std::find_if(a.runs.begin(), a.runs.end(), [&](const SweepRun &o) {
      return o.instance_index == a.runs[i].instance_index &&
             o.record.config.method == r.config.method &&
             o.record.config.layers == r.config.layers &&
             o.record.config.mode == AnsatzMode::Standard;
    });
    REQUIRE(it != a.runs.end());
    CHECK(r.best_expectation <= it->record.best_expectation + 1e-9);
  }

  const auto dir = std::filesystem::temp_directory_path() / "mdsqaoa_sweep_test";
  std::filesystem::remove_all(dir);
  emit_all(spec, a, dir.string());
  CHECK(slurp(dir / "aggregates.csv") == csv);
  CHECK(std::filesystem::exists(dir / "skipped.json"));
  CHECK(std::filesystem::exists(dir / "plots" / "lines_er_n4.svg"));
  CHECK(std::filesystem::exists(dir / "plots" / "box_er_n4.svg"));

  // Aggregates recomputed from the archived runs equal the emitted rows.
  const auto j = nlohmann::json::parse(slurp(dir / "runs.json"));
  std::vector<SweepRun> back;
  for (const auto &e : j)
    back.push_back(sweep_run_from_json(e));
  CHECK(aggregate(back, spec.master_seed) == a.aggregates);
  CHECK(aggregates_csv(aggregate(back, spec.master_seed)) == csv);

  const auto q = qubit_table_csv(qubit_table(spec));
  CHECK(q.rfind("label,n,edges,ours,dinneen,pan,guerrero_bound\n", 0) == 0);
  CHECK(slurp(dir / "qubits.csv") == q);
  std::filesystem::remove_all(dir);
}

TEST_CASE("qubit table row for the 6-vertex cubic graph") {
  SweepSpec s;
  s.families = {GraphFamily::ThreeRegular};
  s.sizes = {6};
  s.instances = 1;
  const auto rows = qubit_table(s);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].edges == 9);
  CHECK(rows[0].counts.ours == 6);
  CHECK(rows[0].counts.dinneen == 18);
  CHECK(rows[0].counts.pan == 18);
  CHECK(rows[0].counts.guerrero_bound == 12);
}

TEST_CASE("line plot has one tick per layer") {
  std::vector<AggregateRow> rows;
  for (unsigned p = 1; p <= 7; ++p)
    rows.push_back({GraphFamily::ThreeRegular, 6, Method::Ours,
                    AnsatzMode::Standard, p, 0.1 * p, 0.1 * p, 0.0, 0.0, 1, 0});
  const auto svg = svg_lines(rows, GraphFamily::ThreeRegular, 6);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "class=\"xtick\"") == 7);
  CHECK(svg.find(">ours<") != std::string::npos);
}

TEST_CASE("unwritable output path is reported") {
  const std::string bad = "/proc/mdsqaoa_no_such_dir/out.csv";
  try {
    write_text_file(bad, "x");
    FAIL("expected an exception");
  } catch (const std::runtime_error &e) {
    CHECK(std::string(e.what()).find(bad) != std::string::npos);
  }
}
