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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace mdsqaoa {

/// Fixed-width bit string. Bit i is the membership flag of vertex i (or qubit
/// i); the textual form lists bit 0 first, so "1000" selects vertex 0.
class Bitstring {
public:
  Bitstring() = default;
  Bitstring(std::uint64_t bits, unsigned width);

  static Bitstring parse(std::string_view text);
  static Bitstring ones(unsigned width);

  unsigned width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](unsigned i) const { return (bits_ >> i) & 1U; }
  unsigned weight() const;
  std::string str() const;

  friend bool operator==(const Bitstring &, const Bitstring &) = default;
  friend auto operator<=>(const Bitstring &, const Bitstring &) = default;

private:
  std::uint64_t bits_ = 0;
  unsigned width_ = 0;
};

using Edge = std::pair<unsigned, unsigned>;

/// Undirected simple graph on vertices 0..n-1. Edges are stored normalized
/// (u < v) and sorted; neighbor lists are derived once at construction.
class Graph {
public:
  static constexpr unsigned kMaxVertices = 24;

  Graph() = default;
  Graph(unsigned n, std::vector<Edge> edges);

  unsigned num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<unsigned> &neighbors(unsigned v) const { return adj_[v]; }
  unsigned degree(unsigned v) const {
    return static_cast<unsigned>(adj_[v].size());
  }
  /// Bit mask of {v} ∪ N(v).
  std::uint64_t closed_neighborhood(unsigned v) const { return closed_[v]; }
  bool has_edge(unsigned u, unsigned v) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  unsigned n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<unsigned>> adj_;
  std::vector<std::uint64_t> closed_;
};

Graph complete_graph(unsigned n);
Graph path_graph(unsigned n);
Graph cycle_graph(unsigned n);
Graph star_graph(unsigned leaves);
Graph empty_graph(unsigned n);

/// Returns a copy of g with vertex v renamed to perm[v].
Graph relabel(const Graph &g, const std::vector<unsigned> &perm);

enum class GraphFamily { ThreeRegular, ErdosRenyi };

std::string to_string(GraphFamily f);
GraphFamily parse_family(std::string_view s);

struct InstanceSpec {
  GraphFamily family = GraphFamily::ErdosRenyi;
  unsigned n = 4;
  double edge_prob = 0.5;
  std::uint64_t seed = 0;
};

/// Deterministic instance generation. Three-regular graphs come from the
/// configuration model; a matching with a loop or a repeated edge is thrown
/// away and redrawn (at most 10000 times). ER graphs keep isolated vertices.
Graph generate(const InstanceSpec &spec);

bool is_dominating(const Graph &g, std::uint64_t x);
bool is_dominating(const Graph &g, const Bitstring &x);

struct MdsSolution {
  unsigned size = 0;
  std::vector<std::uint64_t> optima; // ascending
};

/// Exhaustive search over all 2^n subsets. Ground truth for every other
/// module; n is capped at Graph::kMaxVertices.
MdsSolution brute_force_mds(const Graph &g);

nlohmann::json to_json(const Graph &g);
Graph graph_from_json(const nlohmann::json &j);
Graph load_graph(const std::string &path);
void save_graph(const Graph &g, const std::string &path);

} // namespace mdsqaoa
