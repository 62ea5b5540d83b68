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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdsqaoa/encodings.hpp"
#include "mdsqaoa/graph.hpp"

namespace mdsqaoa {

/// coeff * prod_{q in support} Z_q. An empty support is the identity.
struct ZTerm {
  double coeff = 0.0;
  std::uint64_t support = 0;

  unsigned order() const;
  std::vector<unsigned> qubits() const;
  bool is_identity() const { return support == 0; }
};

/// Canonical sum of Z-strings: one term per support, no |coeff| <= 1e-12,
/// ordered by support size and then by the ascending qubit list.
class ZSum {
public:
  ZSum() = default;
  explicit ZSum(const std::map<std::uint64_t, double> &accumulated);
  explicit ZSum(std::span<const ZTerm> terms);

  const std::vector<ZTerm> &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the identity term (0 if absent).
  double constant() const;
  /// Number of terms that act nontrivially; these carry the per-term angles
  /// of the multi-angle ansatz, in canonical order.
  std::size_t num_non_identity() const;
  /// Smallest register that holds every support.
  unsigned min_qubits() const;

  friend ZSum operator+(const ZSum &a, const ZSum &b);
  friend bool operator==(const ZSum &, const ZSum &) = default;

private:
  std::vector<ZTerm> terms_;
};

bool operator==(const ZTerm &a, const ZTerm &b);

/// Real diagonal of an operator on n qubits; entry b is the eigenvalue on |b>.
class DenseDiagonal {
public:
  DenseDiagonal() = default;
  DenseDiagonal(unsigned n, std::vector<double> values);

  unsigned num_qubits() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t b) const { return values_[b]; }
  std::span<const double> values() const { return values_; }
  double min() const;
  double mean() const;

private:
  unsigned n_ = 0;
  std::vector<double> values_;
};

/// The distinct entries of a diagonal and, per basis state, which one it
/// holds. Lets a phase layer evaluate one exponential per level.
struct DiagonalLevels {
  std::vector<double> values;
  std::vector<std::uint16_t> index;
};

/// Exact (bitwise) grouping of equal entries; nullopt above 65536 levels.
std::optional<DiagonalLevels> diagonal_levels(const DenseDiagonal &d);

/// Auxiliary-free objective Hamiltonian. Per vertex i with closed
/// neighborhood C_i: -1/2 (I + Z_i) - lambda I + lambda / 2^|C_i| * sum over
/// all subsets S of C_i of Z_S.
ZSum build_ours(const Graph &g, double lambda);

/// Ising form of a quadratic pseudo-Boolean objective on num_qubits bits,
/// via x_q = (I - Z_q) / 2. Rejects polynomials of degree > 2.
ZSum build_qubo(const PseudoBoolean &form, unsigned num_qubits);
ZSum build_qubo(const Graph &g, const SurplusLayout &layout, double big_p);

/// -C(x) of the clause objective, so that its ground states maximize C.
ZSum build_guerrero(const Graph &g);

/// Diagonal on n qubits with the |0> -> +1 convention for Z.
DenseDiagonal to_dense(const ZSum &h, unsigned n);
/// Diagonal of sum_t scales[t] * coeff_t * Z_t over the non-identity terms
/// (identity dropped). Used for the multi-angle phase separator.
DenseDiagonal to_dense_scaled(const ZSum &h, unsigned n,
                              std::span<const double> scales);

struct GateEstimate {
  std::size_t rz_count = 0;
  std::size_t cnot_count = 0;

  friend bool operator==(const GateEstimate &, const GateEstimate &) = default;
};

/// One RZ per non-identity term and a CNOT ladder of 2(l - 1) gates around
/// it for an l-qubit string.
GateEstimate gate_estimate(const ZSum &h);

/// One line per term, "coeff q1 q2 ...", coefficient printed round-trip exact.
std::string to_text(const ZSum &h);
ZSum zsum_from_text(std::string_view text);

} // namespace mdsqaoa
