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
#include "mdsqaoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mdsqaoa/random.hpp"

namespace mdsqaoa {

Bitstring::Bitstring(std::uint64_t bits, unsigned width)
    : bits_(bits), width_(width) {
  if (width > 64)
    throw std::invalid_argument("Bitstring: width exceeds 64");
  if (width < 64 && (bits >> width) != 0)
    throw std::invalid_argument("Bitstring: bits set beyond width");
}

Bitstring Bitstring::parse(std::string_view text) {
  if (text.size() > 64)
    throw std::invalid_argument("Bitstring: more than 64 characters");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1')
      bits |= std::uint64_t{1} << i;
    else if (text[i] != '0')
      throw std::invalid_argument("Bitstring: expected only '0' and '1' in \"" +
                                  std::string(text) + "\"");
  }
  return {bits, static_cast<unsigned>(text.size())};
}

Bitstring Bitstring::ones(unsigned width) {
  return {width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1,
          width};
}

unsigned Bitstring::weight() const {
  return static_cast<unsigned>(std::popcount(bits_));
}

std::string Bitstring::str() const {
  std::string s(width_, '0');
  for (unsigned i = 0; i < width_; ++i)
    if ((*this)[i])
      s[i] = '1';
  return s;
}

Graph::Graph(unsigned n, std::vector<Edge> edges) : n_(n) {
  if (n > kMaxVertices)
    throw std::invalid_argument("Graph: at most " +
                                std::to_string(kMaxVertices) +
                                " vertices supported, got " + std::to_string(n));
  for (auto &[u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("Graph: self-loop on vertex " +
                                  std::to_string(u));
    if (u > v)
      std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("Graph: duplicate edge");
  edges_ = std::move(edges);

  adj_.assign(n, {});
  closed_.assign(n, 0);
  for (unsigned v = 0; v < n; ++v)
    closed_[v] = std::uint64_t{1} << v;
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    closed_[u] |= std::uint64_t{1} << v;
    closed_[v] |= std::uint64_t{1} << u;
  }
  for (auto &a : adj_)
    std::sort(a.begin(), a.end());
}

bool Graph::has_edge(unsigned u, unsigned v) const {
  if (u >= n_ || v >= n_ || u == v)
    return false;
  return (closed_[u] >> v) & 1U;
}

Graph complete_graph(unsigned n) {
  std::vector<Edge> e;
  for (unsigned u = 0; u < n; ++u)
    for (unsigned v = u + 1; v < n; ++v)
      e.emplace_back(u, v);
  return {n, std::move(e)};
}

Graph path_graph(unsigned n) {
  std::vector<Edge> e;
  for (unsigned v = 1; v < n; ++v)
    e.emplace_back(v - 1, v);
  return {n, std::move(e)};
}

Graph cycle_graph(unsigned n) {
  if (n < 3)
    throw std::invalid_argument("cycle_graph: n must be at least 3");
  std::vector<Edge> e;
  for (unsigned v = 0; v < n; ++v)
    e.emplace_back(v, (v + 1) % n);
  return {n, std::move(e)};
}

Graph star_graph(unsigned leaves) {
  std::vector<Edge> e;
  for (unsigned v = 1; v <= leaves; ++v)
    e.emplace_back(0, v);
  return {leaves + 1, std::move(e)};
}

Graph empty_graph(unsigned n) { return {n, {}}; }

Graph relabel(const Graph &g, const std::vector<unsigned> &perm) {
  if (perm.size() != g.num_vertices())
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> e;
  e.reserve(g.num_edges());
  for (auto [u, v] : g.edges())
    e.emplace_back(perm.at(u), perm.at(v));
  return {g.num_vertices(), std::move(e)};
}

std::string to_string(GraphFamily f) {
  return f == GraphFamily::ThreeRegular ? "3reg" : "er";
}

GraphFamily parse_family(std::string_view s) {
  if (s == "3reg" || s == "3-regular" || s == "regular")
    return GraphFamily::ThreeRegular;
  if (s == "er" || s == "erdos-renyi")
    return GraphFamily::ErdosRenyi;
  throw std::invalid_argument("unknown graph family: " + std::string(s));
}

namespace {

constexpr int kRegularRetryCap = 10000;

Graph generate_three_regular(unsigned n, Rng &rng) {
  // Configuration model: three stubs per vertex, uniformly random perfect
  // matching of stubs, reject on loops or parallel edges.
  std::vector<unsigned> stubs(3 * n);
  for (int attempt = 0; attempt < kRegularRetryCap; ++attempt) {
    for (unsigned i = 0; i < stubs.size(); ++i)
      stubs[i] = i / 3;
    for (std::size_t i = stubs.size() - 1; i > 0; --i)
      std::swap(stubs[i], stubs[rng.below(i + 1)]);

    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
      unsigned u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v)
        std::swap(u, v);
      for (const auto &e : edges)
        if (e == Edge{u, v}) {
          ok = false;
          break;
        }
      edges.emplace_back(u, v);
    }
    if (ok)
      return {n, std::move(edges)};
  }
  throw std::runtime_error("generate: 3-regular rejection sampling exceeded " +
                           std::to_string(kRegularRetryCap) + " attempts");
}

} // namespace

Graph generate(const InstanceSpec &spec) {
  if (spec.n > Graph::kMaxVertices)
    throw std::invalid_argument("generate: n = " + std::to_string(spec.n) +
                                " exceeds the supported maximum");
  Rng rng(spec.seed);
  switch (spec.family) {
  case GraphFamily::ThreeRegular:
    if (spec.n < 4 || spec.n % 2 != 0)
      throw std::invalid_argument(
          "generate: 3-regular graphs need an even n >= 4, got n = " +
          std::to_string(spec.n));
    return generate_three_regular(spec.n, rng);
  case GraphFamily::ErdosRenyi: {
    if (!(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0))
      throw std::invalid_argument("generate: edge probability outside [0, 1]");
    std::vector<Edge> edges;
    for (unsigned u = 0; u < spec.n; ++u)
      for (unsigned v = u + 1; v < spec.n; ++v)
        if (rng.uniform() < spec.edge_prob)
          edges.emplace_back(u, v);
    return {spec.n, std::move(edges)};
  }
  }
  throw std::invalid_argument("generate: unknown family");
}

bool is_dominating(const Graph &g, std::uint64_t x) {
  for (unsigned v = 0; v < g.num_vertices(); ++v)
    if ((g.closed_neighborhood(v) & x) == 0)
      return false;
  return true;
}

bool is_dominating(const Graph &g, const Bitstring &x) {
  if (x.width() != g.num_vertices())
    throw std::invalid_argument("is_dominating: bitstring has " +
                                std::to_string(x.width()) + " bits, graph has " +
                                std::to_string(g.num_vertices()) + " vertices");
  return is_dominating(g, x.bits());
}

MdsSolution brute_force_mds(const Graph &g) {
  const unsigned n = g.num_vertices();
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("brute_force_mds: graph too large");
  MdsSolution best{n + 1, {}};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    const auto w = static_cast<unsigned>(std::popcount(x));
    if (w > best.size || !is_dominating(g, x))
      continue;
    if (w < best.size) {
      best.size = w;
      best.optima.clear();
    }
    best.optima.push_back(x);
  }
  return best;
}

nlohmann::json to_json(const Graph &g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({u, v});
  return {{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument(
        "graph JSON must be an object with \"n\" and \"edges\"");
  const auto n = j.at("n").get<unsigned>();
  std::vector<Edge> edges;
  for (const auto &e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON: each edge must be [u, v]");
    edges.emplace_back(e[0].get<unsigned>(), e[1].get<unsigned>());
  }
  return {n, std::move(edges)};
}

Graph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open graph file: " + path);
  return graph_from_json(nlohmann::json::parse(in));
}

void save_graph(const Graph &g, const std::string &path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write graph file: " + path);
  out << to_json(g).dump() << '\n';
}

} // namespace mdsqaoa
