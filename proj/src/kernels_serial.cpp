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

namespace mdsqaoa::kernels::serial {

void phase_diagonal(std::span<cplx> amps, std::span<const double> diag,
                    double gamma) {
  for (std::size_t b = 0; b < amps.size(); ++b)
    amps[b] *= std::polar(1.0, -gamma * diag[b]);
}

void phase_zstring(std::span<cplx> amps, std::uint64_t support, double angle) {
  const cplx even = std::polar(1.0, -angle);
  const cplx odd = std::polar(1.0, angle);
  for (std::size_t b = 0; b < amps.size(); ++b)
    amps[b] *= (std::popcount(b & support) & 1) ? odd : even;
}

void phase_table(std::span<cplx> amps, std::span<const std::uint16_t> index,
                 std::span<const cplx> table) {
  for (std::size_t b = 0; b < amps.size(); ++b)
    amps[b] *= table[index[b]];
}

void rx(std::span<cplx> amps, unsigned qubit, double beta) {
  const double c = std::cos(beta);
  const cplx ms(0.0, -std::sin(beta));
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride)
    for (std::size_t k = base; k < base + stride; ++k) {
      const cplx a0 = amps[k];
      const cplx a1 = amps[k + stride];
      amps[k] = c * a0 + ms * a1;
      amps[k + stride] = ms * a0 + c * a1;
    }
}

double expectation(std::span<const cplx> amps, std::span<const double> diag) {
  double sum = 0.0;
  for (std::size_t b = 0; b < amps.size(); ++b)
    sum += std::norm(amps[b]) * diag[b];
  return sum;
}

double norm_squared(std::span<const cplx> amps) {
  double sum = 0.0;
  for (const auto &a : amps)
    sum += std::norm(a);
  return sum;
}

void walsh_hadamard(std::span<double> data) {
  for (std::size_t h = 1; h < data.size(); h <<= 1)
    for (std::size_t base = 0; base < data.size(); base += 2 * h)
      for (std::size_t k = base; k < base + h; ++k) {
        const double u = data[k];
        const double v = data[k + h];
        data[k] = u + v;
        data[k + h] = u - v;
      }
}

} // namespace mdsqaoa::kernels::serial
