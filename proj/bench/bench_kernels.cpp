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

// Serial reference kernels against their OpenMP counterparts. Arg is the
// qubit count. Thread count follows OMP_NUM_THREADS.

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "mdsqaoa/kernels.hpp"
#include "mdsqaoa/random.hpp"

namespace k = mdsqaoa::kernels;

namespace {

struct Data {
  std::vector<k::cplx> amps;
  std::vector<double> diag;
  std::vector<std::uint16_t> index;
  std::vector<k::cplx> table;

  explicit Data(unsigned n) {
    const std::size_t dim = std::size_t{1} << n;
    mdsqaoa::Rng rng(n);
    amps.resize(dim);
    diag.resize(dim);
    index.resize(dim);
    for (std::size_t b = 0; b < dim; ++b) {
      amps[b] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
      diag[b] = rng.uniform(-8.0, 8.0);
      index[b] = static_cast<std::uint16_t>(b % 64);
    }
    for (int l = 0; l < 64; ++l)
      table.push_back(std::polar(1.0, 0.1 * l));
  }
};

void set_bytes(benchmark::State &st, std::size_t per_item) {
  st.SetBytesProcessed(static_cast<std::int64_t>(st.iterations()) *
                       (std::int64_t{1} << st.range(0)) *
                       static_cast<std::int64_t>(per_item));
}

template <auto Fn> void rx_all(benchmark::State &st) {
  const auto n = static_cast<unsigned>(st.range(0));
  Data d(n);
  for (auto _ : st)
    for (unsigned q = 0; q < n; ++q)
      Fn(d.amps, q, 0.3);
  benchmark::DoNotOptimize(d.amps.data());
  set_bytes(st, 2 * sizeof(k::cplx) * n);
}

template <auto Fn> void phase_diagonal(benchmark::State &st) {
  Data d(static_cast<unsigned>(st.range(0)));
  for (auto _ : st)
    Fn(d.amps, d.diag, 0.7);
  benchmark::DoNotOptimize(d.amps.data());
  set_bytes(st, 2 * sizeof(k::cplx) + sizeof(double));
}

template <auto Fn> void phase_table(benchmark::State &st) {
  Data d(static_cast<unsigned>(st.range(0)));
  for (auto _ : st)
    Fn(d.amps, d.index, d.table);
  benchmark::DoNotOptimize(d.amps.data());
  set_bytes(st, 2 * sizeof(k::cplx) + sizeof(std::uint16_t));
}

template <auto Fn> void expectation(benchmark::State &st) {
  Data d(static_cast<unsigned>(st.range(0)));
  for (auto _ : st)
    benchmark::DoNotOptimize(Fn(d.amps, d.diag));
  set_bytes(st, sizeof(k::cplx) + sizeof(double));
}

template <auto Fn> void walsh_hadamard(benchmark::State &st) {
  const auto n = static_cast<unsigned>(st.range(0));
  Data d(n);
  for (auto _ : st)
    Fn(d.diag);
  benchmark::DoNotOptimize(d.diag.data());
  set_bytes(st, 2 * sizeof(double) * n);
}

#define MDSQAOA_BENCH(name)                                                    \
  BENCHMARK_TEMPLATE(name, &k::serial::name)                                   \
      ->Name(#name "/serial")                                                  \
      ->DenseRange(14, 22, 2);                                                 \
  BENCHMARK_TEMPLATE(name, &k::parallel::name)                                 \
      ->Name(#name "/parallel")                                                \
      ->DenseRange(14, 22, 2)

MDSQAOA_BENCH(phase_diagonal);
MDSQAOA_BENCH(phase_table);
MDSQAOA_BENCH(expectation);
MDSQAOA_BENCH(walsh_hadamard);

BENCHMARK_TEMPLATE(rx_all, &k::serial::rx)->Name("rx/serial")->DenseRange(14, 22, 2);
BENCHMARK_TEMPLATE(rx_all, &k::parallel::rx)->Name("rx/parallel")->DenseRange(14, 22, 2);

} // namespace

BENCHMARK_MAIN();
