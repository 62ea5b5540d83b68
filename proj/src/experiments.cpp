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
#include "mdsqaoa/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "mdsqaoa/random.hpp"

namespace mdsqaoa {

void SweepSpec::validate() const {
  if (instances && *instances < 1)
    throw std::invalid_argument("sweep: instance count must be >= 1");
  if (min_layer < 1 || min_layer > max_layer)
    throw std::invalid_argument("sweep: need 1 <= min layer <= max layer");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("sweep: edge probability outside [0, 1]");
  if (qubit_cap < 1 || qubit_cap > StateVector::kMaxQubits)
    throw std::invalid_argument("sweep: qubit cap must be in [1, " +
                                std::to_string(StateVector::kMaxQubits) + "]");
  if (workers < 1)
    throw std::invalid_argument("sweep: need at least one worker");
  for (unsigned n : sizes) {
    if (n < 1 || n > Graph::kMaxVertices)
      throw std::invalid_argument("sweep: size " + std::to_string(n) +
                                  " out of range");
    for (auto f : families)
      if (f == GraphFamily::ThreeRegular && (n % 2 != 0 || n < 4))
        throw std::invalid_argument(
            "sweep: 3-regular graphs need an even size >= 4, got " +
            std::to_string(n));
  }
  penalties.validate();
  optimizer.validate();
}

unsigned default_instances(GraphFamily family, unsigned n) {
  return (family == GraphFamily::ErdosRenyi && n == 4) ? 10 : 20;
}

std::uint64_t instance_seed(std::uint64_t master_seed, GraphFamily family,
                            unsigned n, unsigned index) {
  return derive_seed({master_seed, hash_label(to_string(family)), n, index});
}

namespace {

struct Instance {
  GraphFamily family;
  unsigned n;
  unsigned index;
  InstanceSpec spec;
  std::optional<Graph> graph;
  std::string error;
};

struct Unit {
  const Instance *instance;
  Method method;
  std::vector<SweepRun> runs;
  std::vector<SkippedCell> skipped;
};

bool wants(const SweepSpec &spec, AnsatzMode m) {
  return std::find(spec.modes.begin(), spec.modes.end(), m) != spec.modes.end();
}

void skip_all(const SweepSpec &spec, Unit &u, const std::string &reason,
              const std::string &detail, unsigned qubits) {
  for (auto mode : spec.modes)
    for (unsigned p = spec.min_layer; p <= spec.max_layer; ++p)
      u.skipped.push_back({u.instance->family, u.instance->n, u.instance->index,
                           u.instance->spec.seed, u.method, mode, p, reason,
                           detail, qubits});
}

void run_unit(const SweepSpec &spec, Unit &u) {
  const Instance &inst = *u.instance;
  if (!inst.graph) {
    skip_all(spec, u, "generation_failed", inst.error, 0);
    return;
  }
  const Graph &g = *inst.graph;
  const unsigned qubits = simulated_qubits(g, u.method);
  if (qubits > spec.qubit_cap) {
    skip_all(spec, u, "qubit_cap",
             std::to_string(qubits) + " qubits > cap " +
                 std::to_string(spec.qubit_cap),
             qubits);
    return;
  }
  const Problem problem = compile_problem(g, u.method, spec.penalties, inst.spec);
  const bool standard = wants(spec, AnsatzMode::Standard);
  const bool multi = wants(spec, AnsatzMode::MultiAngle);

  OptimizerConfig ma_opt = spec.optimizer;
  ma_opt.restarts = spec.multi_angle_restarts;

  std::vector<SweepRun> std_runs, ma_runs;
  std::optional<ParameterSet> prev_std, prev_ma;
  for (unsigned p = spec.min_layer; p <= spec.max_layer; ++p) {
    AnsatzConfig cfg{u.method, p, AnsatzMode::Standard, spec.penalties};
    std::vector<ParameterSet> warm;
    if (prev_std)
      warm.push_back(pad_layer(*prev_std));
    RunRecord s = optimize(problem, cfg, spec.optimizer, warm);
    prev_std = s.best;

    if (multi) {
      AnsatzConfig mcfg = cfg;
      mcfg.mode = AnsatzMode::MultiAngle;
      const ParameterShape shape = parameter_shape(problem, mcfg);
      std::vector<ParameterSet> mwarm{tie_to_multi_angle(s.best, shape)};
      if (prev_ma)
        mwarm.push_back(pad_layer(*prev_ma));
      RunRecord m = optimize(problem, mcfg, ma_opt, mwarm);
      prev_ma = m.best;
      ma_runs.push_back({inst.family, inst.n, inst.index, std::move(m)});
    }
    if (standard)
      std_runs.push_back({inst.family, inst.n, inst.index, std::move(s)});
  }
  for (auto mode : spec.modes) {
    auto &src = mode == AnsatzMode::Standard ? std_runs : ma_runs;
    for (auto &r : src)
      u.runs.push_back(std::move(r));
    src.clear();
  }
}

} // namespace

SweepResult run_sweep(const SweepSpec &spec) {
  spec.validate();
  std::vector<Instance> instances;
  for (auto family : spec.families)
    for (unsigned n : spec.sizes) {
      const unsigned count = spec.instances.value_or(default_instances(family, n));
      for (unsigned i = 0; i < count; ++i) {
        Instance inst{family, n, i,
                      {family, n, spec.edge_prob,
                       instance_seed(spec.master_seed, family, n, i)},
                      std::nullopt, {}};
        try {
          inst.graph = generate(inst.spec);
        } catch (const std::exception &e) {
          inst.error = e.what();
        }
        instances.push_back(std::move(inst));
      }
    }

  std::vector<Unit> units;
  for (const auto &inst : instances)
    for (auto m : spec.methods)
      units.push_back({&inst, m, {}, {}});

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= units.size())
        return;
      try {
        run_unit(spec, units[k]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = units.size();
      }
    }
  };
  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(spec.workers, units.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);

  // Units were enumerated in spec order; concatenating them is the stable
  // order, whatever order the workers finished in.
  SweepResult out;
  for (auto &u : units) {
    for (auto &r : u.runs)
      out.runs.push_back(std::move(r));
    for (auto &s : u.skipped)
      out.skipped.push_back(std::move(s));
  }
  out.aggregates = aggregate(out.runs, spec.master_seed);
  return out;
}

double quantile(const std::vector<double> &sorted, double q) {
  if (sorted.empty())
    throw std::invalid_argument("quantile: empty data");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<AggregateRow> aggregate(const std::vector<SweepRun> &runs,
                                    std::uint64_t master_seed) {
  using Key = std::tuple<GraphFamily, unsigned, Method, AnsatzMode, unsigned>;
  std::vector<Key> order;
  std::map<Key, std::vector<double>> groups;
  for (const auto &r : runs) {
    const Key key{r.family, r.n, r.record.config.method, r.record.config.mode,
                  r.record.config.layers};
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh)
      order.push_back(key);
    it->second.push_back(r.record.success_probability);
  }
  std::vector<AggregateRow> rows;
  for (const auto &key : order) {
    const auto &values = groups.at(key);
    double sum = 0.0;
    for (double v : values)
      sum += v;
    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());
    AggregateRow row;
    std::tie(row.family, row.n, row.method, row.mode, row.layers) = key;
    row.mean = sum / static_cast<double>(values.size());
    row.median = quantile(sorted, 0.5);
    row.q1 = quantile(sorted, 0.25);
    row.q3 = quantile(sorted, 0.75);
    row.count = values.size();
    row.seed = master_seed;
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const SweepRun &run) {
  nlohmann::json j = to_json(run.record);
  j["family"] = to_string(run.family);
  j["n"] = run.n;
  j["instance_index"] = run.instance_index;
  return j;
}

SweepRun sweep_run_from_json(const nlohmann::json &j) {
  SweepRun r{parse_family(j.at("family").get<std::string>()),
             j.at("n").get<unsigned>(), j.at("instance_index").get<unsigned>(),
             run_record_from_json(j)};
  return r;
}

nlohmann::json to_json(const SkippedCell &c) {
  return {{"family", to_string(c.family)},
          {"n", c.n},
          {"instance_index", c.instance_index},
          {"instance_seed", c.instance_seed},
          {"method", to_string(c.method)},
          {"mode", to_string(c.mode)},
          {"layers", c.layers},
          {"reason", c.reason},
          {"detail", c.detail},
          {"num_qubits", c.num_qubits}};
}

namespace {

std::string num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string fixed(double v, int digits) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::fixed, digits);
  return std::string(buf, end);
}

} // namespace

std::string aggregates_csv(const std::vector<AggregateRow> &rows) {
  std::string out = "family,n,method,mode,p,mean_psuc,median_psuc,q1,q3,count,seed\n";
  for (const auto &r : rows) {
    out += to_string(r.family) + ',' + std::to_string(r.n) + ',' +
           to_string(r.method) + ',' + to_string(r.mode) + ',' +
           std::to_string(r.layers) + ',' + num(r.mean) + ',' + num(r.median) +
           ',' + num(r.q1) + ',' + num(r.q3) + ',' + std::to_string(r.count) +
           ',' + std::to_string(r.seed) + '\n';
  }
  return out;
}

std::string qubit_table_csv(const std::vector<QubitRow> &rows) {
  std::string out = "label,n,edges,ours,dinneen,pan,guerrero_bound\n";
  for (const auto &r : rows)
    out += r.label + ',' + std::to_string(r.n) + ',' + std::to_string(r.edges) +
           ',' + std::to_string(r.counts.ours) + ',' +
           std::to_string(r.counts.dinneen) + ',' +
           std::to_string(r.counts.pan) + ',' +
           std::to_string(r.counts.guerrero_bound) + '\n';
  return out;
}

std::vector<QubitRow> qubit_table(const SweepSpec &spec) {
  std::vector<QubitRow> rows;
  for (auto family : spec.families)
    for (unsigned n : spec.sizes) {
      const unsigned count = spec.instances.value_or(default_instances(family, n));
      for (unsigned i = 0; i < count; ++i) {
        const InstanceSpec is{family, n, spec.edge_prob,
                              instance_seed(spec.master_seed, family, n, i)};
        Graph g;
        try {
          g = generate(is);
        } catch (const std::exception &) {
          continue;
        }
        rows.push_back({to_string(family) + "#" + std::to_string(i), n,
                        g.num_edges(), qubit_counts(g)});
      }
    }
  return rows;
}

namespace {

// Plot geometry shared by both chart types.
constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 60, kRight = 170, kTop = 40, kBottom = 50;
constexpr const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

double y_of(double v) {
  return kTop + (1.0 - v) * (kHeight - kTop - kBottom);
}

std::string series_name(Method m, AnsatzMode mode) {
  return to_string(m) + (mode == AnsatzMode::MultiAngle ? " (ma)" : "");
}

std::string svg_frame(const std::string &title, const std::vector<double> &xs,
                      const std::vector<std::string> &xlabels) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                  fixed(kWidth, 0) + "\" height=\"" + fixed(kHeight, 0) +
                  "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + fixed(kWidth / 2 - kRight / 2, 1) + "\" y=\"22\" " +
       "text-anchor=\"middle\" font-size=\"14\">" + title + "</text>\n";
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double yb = kHeight - kBottom;
  s += "<line x1=\"" + fixed(x0, 1) + "\" y1=\"" + fixed(yb, 1) + "\" x2=\"" +
       fixed(x1, 1) + "\" y2=\"" + fixed(yb, 1) + "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + fixed(x0, 1) + "\" y1=\"" + fixed(kTop, 1) + "\" x2=\"" +
       fixed(x0, 1) + "\" y2=\"" + fixed(yb, 1) + "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double v = k / 5.0;
    s += "<line class=\"ytick\" x1=\"" + fixed(x0 - 4, 1) + "\" y1=\"" +
         fixed(y_of(v), 1) + "\" x2=\"" + fixed(x0, 1) + "\" y2=\"" +
         fixed(y_of(v), 1) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed(x0 - 8, 1) + "\" y=\"" + fixed(y_of(v) + 4, 1) +
         "\" text-anchor=\"end\">" + fixed(v, 1) + "</text>\n";
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += "<line class=\"xtick\" x1=\"" + fixed(xs[i], 1) + "\" y1=\"" +
         fixed(yb, 1) + "\" x2=\"" + fixed(xs[i], 1) + "\" y2=\"" +
         fixed(yb + 4, 1) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fixed(xs[i], 1) + "\" y=\"" + fixed(yb + 18, 1) +
         "\" text-anchor=\"middle\">" + xlabels[i] + "</text>\n";
  }
  s += "<text x=\"" + fixed((x0 + x1) / 2, 1) + "\" y=\"" +
       fixed(kHeight - 10, 1) + "\" text-anchor=\"middle\">layers p</text>\n";
  s += "<text transform=\"translate(16," + fixed((kTop + yb) / 2, 1) +
       ") rotate(-90)\" text-anchor=\"middle\">success probability</text>\n";
  return s;
}

std::string legend(const std::vector<std::string> &names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const double y = kTop + 10 + 20.0 * static_cast<double>(i);
    const double x = kWidth - kRight + 20;
    s += "<rect x=\"" + fixed(x, 1) + "\" y=\"" + fixed(y - 9, 1) +
         "\" width=\"12\" height=\"12\" fill=\"" + kPalette[i % 8] + "\"/>\n";
    s += "<text x=\"" + fixed(x + 18, 1) + "\" y=\"" + fixed(y + 1, 1) + "\">" +
         names[i] + "</text>\n";
  }
  return s;
}

std::vector<double> tick_positions(std::size_t count) {
  std::vector<double> xs;
  const double span = kWidth - kRight - kLeft;
  for (std::size_t i = 0; i < count; ++i)
    xs.push_back(kLeft + span * (static_cast<double>(i) + 0.5) /
                             static_cast<double>(count));
  return xs;
}

} // namespace

std::string svg_lines(const std::vector<AggregateRow> &rows, GraphFamily family,
                      unsigned n) {
  std::vector<std::pair<Method, AnsatzMode>> series;
  std::vector<unsigned> layers;
  for (const auto &r : rows) {
    if (r.family != family || r.n != n)
      continue;
    if (std::find(series.begin(), series.end(), std::pair{r.method, r.mode}) ==
        series.end())
      series.emplace_back(r.method, r.mode);
    if (std::find(layers.begin(), layers.end(), r.layers) == layers.end())
      layers.push_back(r.layers);
  }
  if (series.empty())
    throw std::invalid_argument("svg_lines: no rows for " + to_string(family) +
                                " n=" + std::to_string(n));
  std::sort(layers.begin(), layers.end());
  const auto xs = tick_positions(layers.size());
  std::vector<std::string> labels, names;
  for (unsigned p : layers)
    labels.push_back(std::to_string(p));
  std::string s = svg_frame("mean success probability, " + to_string(family) +
                                " n=" + std::to_string(n),
                            xs, labels);
  for (std::size_t k = 0; k < series.size(); ++k) {
    names.push_back(series_name(series[k].first, series[k].second));
    std::string pts;
    for (const auto &r : rows) {
      if (r.family != family || r.n != n || r.method != series[k].first ||
          r.mode != series[k].second)
        continue;
      const auto i = static_cast<std::size_t>(
          std::find(layers.begin(), layers.end(), r.layers) - layers.begin());
      pts += fixed(xs[i], 1) + "," + fixed(y_of(r.mean), 1) + " ";
      s += "<circle cx=\"" + fixed(xs[i], 1) + "\" cy=\"" +
           fixed(y_of(r.mean), 1) + "\" r=\"3\" fill=\"" + kPalette[k % 8] +
           "\"/>\n";
    }
    s += "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" +
         std::string(kPalette[k % 8]) + "\" points=\"" + pts + "\"/>\n";
  }
  s += legend(names);
  s += "</svg>\n";
  return s;
}

std::string svg_box(const std::vector<SweepRun> &runs, GraphFamily family,
                    unsigned n) {
  std::vector<std::pair<Method, AnsatzMode>> series;
  std::map<std::pair<unsigned, std::size_t>, std::vector<double>> data;
  std::vector<unsigned> layers;
  for (const auto &r : runs) {
    if (r.family != family || r.n != n)
      continue;
    const std::pair key{r.record.config.method, r.record.config.mode};
    auto it = std::find(series.begin(), series.end(), key);
    if (it == series.end())
      it = series.insert(series.end(), key);
    const auto k = static_cast<std::size_t>(it - series.begin());
    data[{r.record.config.layers, k}].push_back(r.record.success_probability);
    if (std::find(layers.begin(), layers.end(), r.record.config.layers) ==
        layers.end())
      layers.push_back(r.record.config.layers);
  }
  if (series.empty())
    throw std::invalid_argument("svg_box: no runs for " + to_string(family) +
                                " n=" + std::to_string(n));
  std::sort(layers.begin(), layers.end());
  const auto xs = tick_positions(layers.size());
  std::vector<std::string> labels, names;
  for (unsigned p : layers)
    labels.push_back(std::to_string(p));
  std::string s = svg_frame("success probability, " + to_string(family) +
                                " n=" + std::to_string(n),
                            xs, labels);
  const double slot = (kWidth - kRight - kLeft) / static_cast<double>(layers.size());
  const double box_w = 0.8 * slot / static_cast<double>(series.size());
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (std::size_t k = 0; k < series.size(); ++k) {
      auto it = data.find({layers[i], k});
      if (it == data.end())
        continue;
      auto v = it->second;
      std::sort(v.begin(), v.end());
      const double q1 = quantile(v, 0.25), med = quantile(v, 0.5),
                   q3 = quantile(v, 0.75);
      const double iqr = q3 - q1;
      double lo = q1, hi = q3;
      for (double x : v) {
        if (x >= q1 - 1.5 * iqr)
          lo = std::min(lo, x);
        if (x <= q3 + 1.5 * iqr)
          hi = std::max(hi, x);
      }
      const double left = xs[i] - 0.4 * slot + box_w * static_cast<double>(k);
      const double mid = left + box_w / 2;
      const std::string color = kPalette[k % 8];
      s += "<line x1=\"" + fixed(mid, 1) + "\" y1=\"" + fixed(y_of(hi), 1) +
           "\" x2=\"" + fixed(mid, 1) + "\" y2=\"" + fixed(y_of(lo), 1) +
           "\" stroke=\"" + color + "\"/>\n";
      s += "<rect class=\"box\" x=\"" + fixed(left + 0.1 * box_w, 1) +
           "\" y=\"" + fixed(y_of(q3), 1) + "\" width=\"" +
           fixed(0.8 * box_w, 1) + "\" height=\"" +
           fixed(y_of(q1) - y_of(q3), 1) + "\" fill=\"" + color +
           "\" fill-opacity=\"0.35\" stroke=\"" + color + "\"/>\n";
      s += "<line x1=\"" + fixed(left + 0.1 * box_w, 1) + "\" y1=\"" +
           fixed(y_of(med), 1) + "\" x2=\"" + fixed(left + 0.9 * box_w, 1) +
           "\" y2=\"" + fixed(y_of(med), 1) + "\" stroke=\"black\"/>\n";
    }
  for (const auto &[m, mode] : series)
    names.push_back(series_name(m, mode));
  s += legend(names);
  s += "</svg>\n";
  return s;
}

void write_text_file(const std::string &path, const std::string &text) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty())
    fs::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out)
    throw std::runtime_error("failed writing " + path);
}

void emit_all(const SweepSpec &spec, const SweepResult &result,
              const std::string &dir) {
  const std::string base = dir.empty() ? std::string(".") : dir;
  write_text_file(base + "/aggregates.csv", aggregates_csv(result.aggregates));

  nlohmann::json runs = nlohmann::json::array();
  for (const auto &r : result.runs)
    runs.push_back(to_json(r));
  write_text_file(base + "/runs.json", runs.dump(1) + "\n");

  nlohmann::json skipped = nlohmann::json::array();
  for (const auto &c : result.skipped)
    skipped.push_back(to_json(c));
  write_text_file(base + "/skipped.json", skipped.dump(1) + "\n");

  write_text_file(base + "/qubits.csv", qubit_table_csv(qubit_table(spec)));

  for (auto family : spec.families)
    for (unsigned n : spec.sizes) {
      const bool any = std::any_of(
          result.aggregates.begin(), result.aggregates.end(),
          [&](const AggregateRow &r) { return r.family == family && r.n == n; });
      if (!any)
        continue;
      const std::string stem = to_string(family) + "_n" + std::to_string(n);
      write_text_file(base + "/plots/lines_" + stem + ".svg",
                      svg_lines(result.aggregates, family, n));
      write_text_file(base + "/plots/box_" + stem + ".svg",
                      svg_box(result.runs, family, n));
    }
}

} // namespace mdsqaoa
