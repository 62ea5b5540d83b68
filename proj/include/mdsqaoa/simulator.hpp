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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mdsqaoa/hamiltonian.hpp"

namespace mdsqaoa {

using cplx = std::complex<double>;

/// Dense n-qubit state. Amplitude index bit q is qubit q.
class StateVector {
public:
  static constexpr unsigned kMaxQubits = 24;

  /// |0...0>
  explicit StateVector(unsigned n);
  static StateVector basis(unsigned n, std::uint64_t index);
  static StateVector from_amplitudes(unsigned n, std::vector<cplx> amps);

  unsigned num_qubits() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }
  const cplx &operator[](std::size_t b) const { return amps_[b]; }

  double norm_squared() const;
  double probability(std::uint64_t b) const { return std::norm(amps_[b]); }

private:
  StateVector(unsigned n, std::vector<cplx> amps);

  unsigned n_;
  std::vector<cplx> amps_;
};

/// |<a|b>|^2
double fidelity(const StateVector &a, const StateVector &b);
double max_amplitude_distance(const StateVector &a, const StateVector &b);

StateVector plus_state(unsigned n);

/// amp_b <- amp_b * exp(-i gamma d_b)
void apply_phase_diagonal(StateVector &s, const DenseDiagonal &d, double gamma);
/// Same operator as apply_phase_diagonal on the diagonal `levels` encodes.
void apply_phase_levels(StateVector &s, const DiagonalLevels &levels,
                        double gamma);

/// Gate-by-gate phase separation: one exp(-i theta_t coeff_t Z_t) per
/// non-identity term, theta_t = gamma, or angles[t] when per-term angles are
/// given (indexed over the non-identity terms in canonical order).
void apply_phase_terms(StateVector &s, const ZSum &h, double gamma,
                       std::optional<std::span<const double>> angles = {});

/// prod_q exp(-i beta X_q), i.e. RX(2 beta) on every qubit.
void apply_mixer(StateVector &s, double beta);
/// Per-qubit mixer angles; betas.size() must equal the qubit count.
void apply_mixer(StateVector &s, std::span<const double> betas);

double expectation(const StateVector &s, const DenseDiagonal &d);

/// Total probability of the target basis states (duplicates counted once).
double overlap_probability(const StateVector &s,
                           std::span<const std::uint64_t> targets);

using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// i.i.d. computational-basis measurements, deterministic per seed.
Histogram sample(const StateVector &s, std::uint64_t shots,
                 std::uint64_t seed);

/// Debug dump: uint32 n, then 2^n (re, im) double pairs, little-endian.
void write_state(const StateVector &s, std::ostream &out);
StateVector read_state(std::istream &in);

} // namespace mdsqaoa
