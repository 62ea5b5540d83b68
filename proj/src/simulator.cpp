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
#include "mdsqaoa/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "mdsqaoa/kernels.hpp"
#include "mdsqaoa/random.hpp"

namespace mdsqaoa {

namespace kp = kernels::parallel;

namespace {

void check_qubits(unsigned n) {
  if (n < 1 || n > StateVector::kMaxQubits)
    throw std::invalid_argument("state vector: qubit count " +
                                std::to_string(n) + " outside [1, " +
                                std::to_string(StateVector::kMaxQubits) + "]");
}

} // namespace

StateVector::StateVector(unsigned n) : n_(n) {
  check_qubits(n);
  amps_.assign(std::size_t{1} << n, cplx{});
  amps_[0] = 1.0;
}

StateVector::StateVector(unsigned n, std::vector<cplx> amps)
    : n_(n), amps_(std::move(amps)) {}

StateVector StateVector::basis(unsigned n, std::uint64_t index) {
  StateVector s(n);
  if (index >= s.size())
    throw std::invalid_argument("basis: index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(unsigned n, std::vector<cplx> amps) {
  check_qubits(n);
  if (amps.size() != (std::size_t{1} << n))
    throw std::invalid_argument("from_amplitudes: expected 2^n amplitudes");
  return {n, std::move(amps)};
}

double StateVector::norm_squared() const { return kp::norm_squared(amps_); }

double fidelity(const StateVector &a, const StateVector &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("fidelity: size mismatch");
  cplx ip{};
  for (std::size_t i = 0; i < a.size(); ++i)
    ip += std::conj(a[i]) * b[i];
  return std::norm(ip);
}

double max_amplitude_distance(const StateVector &a, const StateVector &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("max_amplitude_distance: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

StateVector plus_state(unsigned n) {
  check_qubits(n);
  const double amp = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
  return StateVector::from_amplitudes(
      n, std::vector<cplx>(std::size_t{1} << n, cplx(amp, 0.0)));
}

void apply_phase_diagonal(StateVector &s, const DenseDiagonal &d,
                          double gamma) {
  if (d.size() != s.size())
    throw std::invalid_argument("apply_phase_diagonal: diagonal has " +
                                std::to_string(d.size()) + " entries, state has " +
                                std::to_string(s.size()));
  kp::phase_diagonal(s.amplitudes(), d.values(), gamma);
}

void apply_phase_levels(StateVector &s, const DiagonalLevels &levels,
                        double gamma) {
  if (levels.index.size() != s.size())
    throw std::invalid_argument("apply_phase_levels: size mismatch");
  std::vector<cplx> table(levels.values.size());
  for (std::size_t k = 0; k < table.size(); ++k)
    table[k] = std::polar(1.0, -gamma * levels.values[k]);
  kp::phase_table(s.amplitudes(), levels.index, table);
}

void apply_phase_terms(StateVector &s, const ZSum &h, double gamma,
                       std::optional<std::span<const double>> angles) {
  if (h.min_qubits() > s.num_qubits())
    throw std::invalid_argument("apply_phase_terms: term support exceeds state");
  if (angles && angles->size() != h.num_non_identity())
    throw std::invalid_argument("apply_phase_terms: expected " +
                                std::to_string(h.num_non_identity()) +
                                " angles, got " + std::to_string(angles->size()));
  std::size_t k = 0;
  for (const auto &t : h.terms()) {
    if (t.is_identity())
      continue;
    const double theta = angles ? (*angles)[k] : gamma;
    ++k;
    kp::phase_zstring(s.amplitudes(), t.support, theta * t.coeff);
  }
}

void apply_mixer(StateVector &s, double beta) {
  for (unsigned q = 0; q < s.num_qubits(); ++q)
    kp::rx(s.amplitudes(), q, beta);
}

void apply_mixer(StateVector &s, std::span<const double> betas) {
  if (betas.size() != s.num_qubits())
    throw std::invalid_argument("apply_mixer: expected " +
                                std::to_string(s.num_qubits()) +
                                " angles, got " + std::to_string(betas.size()));
  for (unsigned q = 0; q < s.num_qubits(); ++q)
    kp::rx(s.amplitudes(), q, betas[q]);
}

double expectation(const StateVector &s, const DenseDiagonal &d) {
  if (d.size() != s.size())
    throw std::invalid_argument("expectation: size mismatch");
  return kp::expectation(s.amplitudes(), d.values());
}

double overlap_probability(const StateVector &s,
                           std::span<const std::uint64_t> targets) {
  if (targets.empty())
    throw std::invalid_argument("overlap_probability: empty target set");
  std::vector<std::uint64_t> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  double p = 0.0;
  for (auto b : sorted) {
    if (b >= s.size())
      throw std::invalid_argument("overlap_probability: target out of range");
    p += s.probability(b);
  }
  return p;
}

Histogram sample(const StateVector &s, std::uint64_t shots,
                 std::uint64_t seed) {
  if (shots < 1)
    throw std::invalid_argument("sample: shots must be >= 1");
  std::vector<double> cdf(s.size());
  double acc = 0.0;
  for (std::size_t b = 0; b < s.size(); ++b) {
    acc += s.probability(b);
    cdf[b] = acc;
  }
  Rng rng(seed);
  Histogram h;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end())
      --it;
    ++h[static_cast<std::uint64_t>(it - cdf.begin())];
  }
  return h;
}

namespace {

template <class T> void put_le(std::ostream &out, T value) {
  static_assert(std::endian::native == std::endian::little,
                "state dump assumes a little-endian host");
  out.write(reinterpret_cast<const char *>(&value), sizeof value);
}

template <class T> T get_le(std::istream &in) {
  T value{};
  in.read(reinterpret_cast<char *>(&value), sizeof value);
  if (!in)
    throw std::runtime_error("read_state: truncated input");
  return value;
}

} // namespace

void write_state(const StateVector &s, std::ostream &out) {
  put_le<std::uint32_t>(out, s.num_qubits());
  for (const auto &a : s.amplitudes()) {
    put_le(out, a.real());
    put_le(out, a.imag());
  }
}

StateVector read_state(std::istream &in) {
  const auto n = get_le<std::uint32_t>(in);
  check_qubits(n);
  std::vector<cplx> amps(std::size_t{1} << n);
  for (auto &a : amps) {
    const double re = get_le<double>(in);
    const double im = get_le<double>(in);
    a = {re, im};
  }
  return StateVector::from_amplitudes(n, std::move(amps));
}

} // namespace mdsqaoa
