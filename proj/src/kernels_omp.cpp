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
#include "mdsqaoa/kernels.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace mdsqaoa::kernels::parallel {

namespace {

using index_t = std::int64_t;

bool go_parallel(std::size_t size) { return size >= kParallelThreshold; }

} // namespace

void phase_diagonal(std::span<cplx> amps, std::span<const double> diag,
                    double gamma) {
  const auto size = static_cast<index_t>(amps.size());
  cplx *a = amps.data();
  const double *d = diag.data();
#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
  for (index_t b = 0; b < size; ++b)
    a[b] *= std::polar(1.0, -gamma * d[b]);
}

void phase_zstring(std::span<cplx> amps, std::uint64_t support, double angle) {
  const cplx even = std::polar(1.0, -angle);
  const cplx odd = std::polar(1.0, angle);
  const auto size = static_cast<index_t>(amps.size());
  cplx *a = amps.data();
#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
  for (index_t b = 0; b < size; ++b)
    a[b] *= (std::popcount(static_cast<std::uint64_t>(b) & support) & 1) ? odd
                                                                         : even;
}

void phase_table(std::span<cplx> amps, std::span<const std::uint16_t> index,
                 std::span<const cplx> table) {
  const auto size = static_cast<index_t>(amps.size());
  cplx *a = amps.data();
  const std::uint16_t *ix = index.data();
  const cplx *t = table.data();
#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))
  for (index_t b = 0; b < size; ++b)
    a[b] *= t[ix[b]];
}

void rx(std::span<cplx> amps, unsigned qubit, double beta) {
  // (a0, a1) -> (c a0 - i s a1, -i s a0 + c a1), written out in reals.
  const double c = std::cos(beta);
  const double s = std::sin(beta);
  const std::uint64_t stride = std::uint64_t{1} << qubit;
  const std::uint64_t low = stride - 1;
  const auto pairs = static_cast<index_t>(amps.size() / 2);
  double *a = reinterpret_cast<double *>(amps.data());
#pragma omp parallel for schedule(static) if (go_parallel(amps.size()))       \
    firstprivate(a, c, s, low, stride)
  for (index_t i = 0; i < pairs; ++i) {
    const auto u = static_cast<std::uint64_t>(i);
    // Insert a zero at bit `qubit` to get the |..0..> partner.
    const std::uint64_t k0 = 2 * (((u & ~low) << 1) | (u & low));
    const std::uint64_t k1 = k0 + 2 * stride;
    const double r0 = a[k0], i0 = a[k0 + 1];
    const double r1 = a[k1], i1 = a[k1 + 1];
    a[k0] = c * r0 + s * i1;
    a[k0 + 1] = c * i0 - s * r1;
    a[k1] = c * r1 + s * i0;
    a[k1 + 1] = c * i1 - s * r0;
  }
}

namespace {

template <class Term>
double blocked_sum(std::size_t size, Term term) {
  const std::size_t blocks = (size + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
  const auto nblocks = static_cast<index_t>(blocks);
#pragma omp parallel for schedule(static) if (go_parallel(size))
  for (index_t blk = 0; blk < nblocks; ++blk) {
    const std::size_t lo = static_cast<std::size_t>(blk) * kReductionBlock;
    const std::size_t hi = std::min(size, lo + kReductionBlock);
    double s = 0.0;
    for (std::size_t b = lo; b < hi; ++b)
      s += term(b);
    partial[static_cast<std::size_t>(blk)] = s;
  }
  double total = 0.0;
  for (double s : partial)
    total += s;
  return total;
}

} // namespace

double expectation(std::span<const cplx> amps, std::span<const double> diag) {
  return blocked_sum(amps.size(), [&](std::size_t b) {
    return std::norm(amps[b]) * diag[b];
  });
}

double norm_squared(std::span<const cplx> amps) {
  return blocked_sum(amps.size(),
                     [&](std::size_t b) { return std::norm(amps[b]); });
}

void walsh_hadamard(std::span<double> data) {
  const auto half = static_cast<index_t>(data.size() / 2);
  double *d = data.data();
  for (std::uint64_t h = 1; h < data.size(); h <<= 1) {
    const std::uint64_t low = h - 1;
#pragma omp parallel for schedule(static) if (go_parallel(data.size()))
    for (index_t i = 0; i < half; ++i) {
      const auto u = static_cast<std::uint64_t>(i);
      const std::uint64_t k0 = ((u & ~low) << 1) | (u & low);
      const std::uint64_t k1 = k0 | h;
      const double x = d[k0];
      const double y = d[k1];
      d[k0] = x + y;
      d[k1] = x - y;
    }
  }
}

} // namespace mdsqaoa::kernels::parallel
