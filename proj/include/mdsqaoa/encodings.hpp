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
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mdsqaoa/graph.hpp"

namespace mdsqaoa {

/// Penalty weights. lambda scales the domination term of the auxiliary-free
/// objective; big_p scales the squared-surplus penalties of the two QUBO
/// baselines. Both must exceed 1.
struct PenaltyConfig {
  double lambda = 2.0;
  double big_p = 2.0;

  void validate() const;
};

enum class QuboKind { Dinneen, Pan };

struct SurplusVar {
  unsigned index; // position in the full register (vertex bits come first)
  double coeff;
};

/// Placement of the surplus binaries y_{i,k} after the n vertex bits,
/// vertex-major then k ascending.
struct SurplusLayout {
  QuboKind kind = QuboKind::Dinneen;
  unsigned num_vertices = 0;
  std::vector<std::vector<SurplusVar>> per_vertex;
  unsigned total_aux = 0;

  unsigned register_size() const { return num_vertices + total_aux; }
};

/// floor(log2 d) + 1 surplus bits with weights 2^k for every vertex with
/// d >= 1; isolated vertices get none.
SurplusLayout dinneen_layout(const Graph &g);
/// No surplus for d < 2; otherwise floor(log2 d) + 1 bits whose weights are
/// 1, 2, ..., 2^(K-1) and d + 1 - 2^K for the last one (K = floor(log2 d)).
SurplusLayout pan_layout(const Graph &g);
SurplusLayout make_layout(const Graph &g, QuboKind kind);

nlohmann::json to_json(const SurplusLayout &layout);

/// 1 - prod(1 - b). Throws on an empty input or a non-binary entry.
int or_identity(std::span<const int> bits);

/// Minimization form of the auxiliary-free objective:
///   -sum_i (1 - x_i) - lambda * sum_i [1 - (1 - x_i) prod_{j in N(i)} (1 - x_j)]
double cost_ours(const Graph &g, std::uint64_t x, double lambda);
double cost_ours(const Graph &g, const Bitstring &x, double lambda);

/// QUBO objective sum_i x_i + P * sum_i p_i evaluated on the full register
/// z = (vertex bits, surplus bits).
double cost_qubo(const Graph &g, const SurplusLayout &layout, std::uint64_t z,
                 double big_p);
double cost_dinneen(const Graph &g, const Bitstring &z, double big_p);
double cost_pan(const Graph &g, const Bitstring &z, double big_p);

/// Clause objective C(x) = sum_k T_k(x) + D_k(x), to be maximized. T_k is
/// the OR over the closed neighborhood of k.
double cost_guerrero(const Graph &g, std::uint64_t x);
double cost_guerrero(const Graph &g, const Bitstring &x);

struct QubitCounts {
  unsigned ours = 0;
  unsigned dinneen = 0;
  unsigned pan = 0;
  unsigned guerrero_bound = 0;
};

QubitCounts qubit_counts(const Graph &g);

/// Multilinear polynomial over binary variables. A monomial is the bit mask
/// of its variables; products take the union of masks because x^2 = x.
class PseudoBoolean {
public:
  PseudoBoolean() = default;
  explicit PseudoBoolean(double constant);

  static PseudoBoolean variable(unsigned index, double coeff = 1.0);

  PseudoBoolean &operator+=(const PseudoBoolean &rhs);
  PseudoBoolean &operator-=(const PseudoBoolean &rhs);
  PseudoBoolean &operator*=(double s);
  friend PseudoBoolean operator+(PseudoBoolean a, const PseudoBoolean &b) {
    return a += b;
  }
  friend PseudoBoolean operator-(PseudoBoolean a, const PseudoBoolean &b) {
    return a -= b;
  }
  friend PseudoBoolean operator*(PseudoBoolean a, double s) { return a *= s; }
  friend PseudoBoolean operator*(const PseudoBoolean &a,
                                 const PseudoBoolean &b);

  unsigned degree() const;
  double evaluate(std::uint64_t z) const;
  const std::map<std::uint64_t, double> &monomials() const { return terms_; }

private:
  void prune();
  std::map<std::uint64_t, double> terms_;
};

/// The QUBO objective of a baseline as a polynomial over the full register.
PseudoBoolean qubo_form(const Graph &g, const SurplusLayout &layout,
                        double big_p);

} // namespace mdsqaoa
