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

// Amplitude-level loops behind the simulator. Every kernel exists twice with
// the same signature: `serial` is the plain reference loop kept for tests and
// benchmarks, `parallel` is the OpenMP version used by the library. Sizes are
// powers of two; callers validate shapes.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace mdsqaoa::kernels {

using cplx = std::complex<double>;

/// Below this many amplitudes the parallel kernels run on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

/// Block size of the fixed-order partial sums in parallel::expectation.
inline constexpr std::size_t kReductionBlock = std::size_t{1} << 12;

namespace serial {

/// amps[b] *= exp(-i * gamma * diag[b])
void phase_diagonal(std::span<cplx> amps, std::span<const double> diag,
                    double gamma);
/// amps[b] *= exp(-i * angle * z(b)), z(b) = (-1)^popcount(b & support)
void phase_zstring(std::span<cplx> amps, std::uint64_t support, double angle);
/// amps[b] *= table[index[b]]
void phase_table(std::span<cplx> amps, std::span<const std::uint16_t> index,
                 std::span<const cplx> table);
/// exp(-i beta X) on one qubit.
void rx(std::span<cplx> amps, unsigned qubit, double beta);
double expectation(std::span<const cplx> amps, std::span<const double> diag);
double norm_squared(std::span<const cplx> amps);
/// In-place unnormalized Walsh-Hadamard transform:
/// out[b] = sum_s in[s] * (-1)^popcount(s & b).
void walsh_hadamard(std::span<double> data);

} // namespace serial

namespace parallel {

void phase_diagonal(std::span<cplx> amps, std::span<const double> diag,
                    double gamma);
void phase_zstring(std::span<cplx> amps, std::uint64_t support, double angle);
void phase_table(std::span<cplx> amps, std::span<const std::uint16_t> index,
                 std::span<const cplx> table);
void rx(std::span<cplx> amps, unsigned qubit, double beta);
/// Sums per fixed-size block, then adds the block sums in index order, so the
/// result does not depend on the thread count.
double expectation(std::span<const cplx> amps, std::span<const double> diag);
double norm_squared(std::span<const cplx> amps);
void walsh_hadamard(std::span<double> data);

} // namespace parallel

} // namespace mdsqaoa::kernels
