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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mdsqaoa/kernels.hpp"
#include "mdsqaoa/simulator.hpp"
#include "oracles.hpp"

using namespace mdsqaoa;

namespace {

StateVector random_state(unsigned n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<cplx> a(std::size_t{1} << n);
  double norm = 0.0;
  for (auto &x : a) {
    x = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    norm += std::norm(x);
  }
  for (auto &x : a)
    x /= std::sqrt(norm);
  return StateVector::from_amplitudes(n, std::move(a));
}

std::vector<ZSum> method_hamiltonians(const Graph &g) {
  return {build_ours(g, 2.0), build_guerrero(g),
          build_qubo(g, pan_layout(g), 2.0)};
}

} // namespace

TEST_CASE("plus state") {
  const auto s1 = plus_state(1);
  CHECK(std::abs(s1[0] - cplx(M_SQRT1_2, 0)) < 1e-15);
  CHECK(std::abs(s1[1] - cplx(M_SQRT1_2, 0)) < 1e-15);
  const auto s2 = plus_state(2);
  for (std::size_t b = 0; b < 4; ++b)
    CHECK(s2[b] == cplx(0.5, 0.0));
  CHECK(plus_state(12).norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(plus_state(0), std::invalid_argument);
  CHECK_THROWS_AS(plus_state(25), std::invalid_argument);
}

TEST_CASE("diagonal phase") {
  const auto s = random_state(5, 1);
  const auto d = to_dense(build_ours(cycle_graph(5), 2.0), 5);

  auto t = s;
  apply_phase_diagonal(t, d, 0.0);
  CHECK(max_amplitude_distance(s, t) == 0.0);

  t = s;
  apply_phase_diagonal(t, DenseDiagonal(5, std::vector<double>(32, 1.7)), 0.9);
  for (std::size_t b = 0; b < s.size(); ++b) {
    CHECK(t.probability(b) == doctest::Approx(s.probability(b)));
    CHECK(std::abs(t[b] - s[b] * std::exp(cplx(0, -0.9 * 1.7))) < 1e-14);
  }
  CHECK_THROWS_AS(apply_phase_diagonal(t, to_dense(ZSum(), 4), 1.0),
                  std::invalid_argument);
}

TEST_CASE("term phase") {
  SUBCASE("single Z at gamma = pi") {
    auto s = plus_state(1);
    apply_phase_terms(s, ZSum(std::vector<ZTerm>{{1.0, 1}}), M_PI);
    CHECK(std::abs(s[0] - M_SQRT1_2 * std::exp(cplx(0, -M_PI))) < 1e-15);
    CHECK(std::abs(s[1] - M_SQRT1_2 * std::exp(cplx(0, M_PI))) < 1e-15);
  }
  SUBCASE("zero overrides are the identity") {
    const auto h = build_ours(path_graph(4), 2.0);
    const auto s = random_state(4, 2);
    auto t = s;
    const std::vector<double> zeros(h.num_non_identity(), 0.0);
    apply_phase_terms(t, h, 1.3, zeros);
    CHECK(max_amplitude_distance(s, t) < 1e-15);
  }
  SUBCASE("overrides equal to gamma reproduce the standard layer") {
    const auto h = build_ours(star_graph(4), 2.0);
    const auto s = random_state(5, 3);
    auto a = s, b = s;
    apply_phase_terms(a, h, 0.77);
    const std::vector<double> same(h.num_non_identity(), 0.77);
    apply_phase_terms(b, h, 0.0, same);
    CHECK(max_amplitude_distance(a, b) < 1e-12);
  }
  SUBCASE("length mismatch is rejected") {
    auto s = plus_state(3);
    const auto h = build_ours(path_graph(3), 2.0);
    CHECK_THROWS_AS(apply_phase_terms(s, h, 0.1, std::vector<double>{1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("term order does not matter") {
  const auto h = build_ours(generate({GraphFamily::ErdosRenyi, 6, 0.5, 4}), 2.0);
  const auto s = random_state(6, 4);
  auto forward = s;
  apply_phase_terms(forward, h, 0.61);
  auto backward = s;
  const auto &terms = h.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    kernels::serial::phase_zstring(backward.amplitudes(), it->support,
                                   0.61 * it->coeff);
  // backward also applied the identity term: a global phase only.
  CHECK(std::abs(fidelity(forward, backward) - 1.0) < 1e-12);
  for (std::size_t b = 0; b < s.size(); ++b)
    CHECK(std::abs(forward[b] * std::exp(cplx(0, -0.61 * h.constant())) -
                   backward[b]) < 1e-12);
}

TEST_CASE("diagonal and term routes agree") {
  std::vector<Graph> gs{complete_graph(4), path_graph(5)};
  for (std::uint64_t s = 0; s < 3; ++s) {
    gs.push_back(generate({GraphFamily::ErdosRenyi, 8, 0.5, s}));
    gs.push_back(generate({GraphFamily::ThreeRegular, 10, 0.5, s}));
  }
  for (const auto &g : gs)
    for (const auto &h : method_hamiltonians(g)) {
      const unsigned n = std::max(h.min_qubits(), g.num_vertices());
      if (n > 12)
        continue;
      const auto s = random_state(n, n);
      auto a = s, b = s;
      apply_phase_diagonal(a, to_dense(h, n), 0.43);
      apply_phase_terms(b, h, 0.43);
      CHECK(std::abs(fidelity(a, b) - 1.0) < 1e-10);
    }
}

TEST_CASE("mixer") {
  const auto s = random_state(4, 5);
  auto t = s;
  apply_mixer(t, 0.0);
  CHECK(max_amplitude_distance(s, t) == 0.0);

  t = s;
  apply_mixer(t, 0.9);
  CHECK(t.norm_squared() == doctest::Approx(1.0).epsilon(1e-13));
  apply_mixer(t, -0.9);
  CHECK(max_amplitude_distance(s, t) < 1e-12);

  auto p = plus_state(3);
  apply_mixer(p, M_PI / 2);
  const cplx phase = std::pow(cplx(0, -1), 3);
  for (std::size_t b = 0; b < 8; ++b)
    CHECK(std::abs(p[b] - phase * std::sqrt(0.125)) < 1e-14);

  StateVector z(1);
  apply_mixer(z, M_PI / 4);
  CHECK(std::abs(z[0] - cplx(std::cos(M_PI / 4), 0)) < 1e-15);
  CHECK(std::abs(z[1] - cplx(0, -std::sin(M_PI / 4))) < 1e-15);

  const std::vector<double> betas{0.1, 0.2, 0.3, 0.4};
  t = s;
  apply_mixer(t, betas);
  const std::vector<double> back{-0.1, -0.2, -0.3, -0.4};
  apply_mixer(t, back);
  CHECK(max_amplitude_distance(s, t) < 1e-12);
  CHECK_THROWS_AS(apply_mixer(t, std::vector<double>{0.1}),
                  std::invalid_argument);
}

TEST_CASE("norm drift over seven layers") {
  const Graph g = generate({GraphFamily::ThreeRegular, 10, 0.5, 1});
  const auto d = to_dense(build_ours(g, 2.0), 10);
  auto s = plus_state(10);
  for (int k = 0; k < 7; ++k) {
    apply_phase_diagonal(s, d, 0.3 + 0.1 * k);
    apply_mixer(s, 0.7 - 0.05 * k);
    CHECK(std::abs(s.norm_squared() - 1.0) <= 1e-10);
  }
}

TEST_CASE("expectation") {
  const auto d = to_dense(build_ours(complete_graph(4), 2.0), 4);
  CHECK(expectation(plus_state(4), d) == doctest::Approx(d.mean()));
  for (std::uint64_t b = 0; b < 16; ++b)
    CHECK(expectation(StateVector::basis(4, b), d) == d[b]);
  CHECK_THROWS_AS(expectation(plus_state(3), d), std::invalid_argument);
}

TEST_CASE("expectation agrees with shot sampling") {
  const auto s = random_state(6, 8);
  const auto d = to_dense(build_ours(cycle_graph(6), 2.0), 6);
  const double mu = expectation(s, d);
  double second = 0.0;
  for (std::size_t b = 0; b < s.size(); ++b)
    second += s.probability(b) * d[b] * d[b];
  const double sigma = std::sqrt((second - mu * mu) / 100000.0);
  const auto h = sample(s, 100000, 21);
  double est = 0.0;
  for (auto [b, c] : h)
    est += d[b] * double(c);
  est /= 100000.0;
  CHECK(std::abs(est - mu) <= 4.0 * sigma);
}

TEST_CASE("identity terms do not change probabilities") {
  const Graph g = star_graph(3);
  const auto h = build_ours(g, 2.0);
  std::vector<ZTerm> stripped;
  for (const auto &t : h.terms())
    if (!t.is_identity())
      stripped.push_back(t);
  auto a = plus_state(4), b = plus_state(4);
  apply_phase_diagonal(a, to_dense(h, 4), 0.8);
  apply_phase_diagonal(b, to_dense(ZSum(stripped), 4), 0.8);
  apply_mixer(a, 0.3);
  apply_mixer(b, 0.3);
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(a.probability(i) == doctest::Approx(b.probability(i)).epsilon(1e-13));
}

TEST_CASE("overlap probability") {
  const std::vector<std::uint64_t> k4{1, 2, 4, 8};
  CHECK(overlap_probability(plus_state(4), k4) == doctest::Approx(0.25));
  CHECK(overlap_probability(StateVector::basis(3, 2),
                            std::vector<std::uint64_t>{2}) == 1.0);
  CHECK(overlap_probability(StateVector::basis(3, 2),
                            std::vector<std::uint64_t>{1, 3}) == 0.0);
  // Duplicates count once.
  CHECK(overlap_probability(StateVector::basis(3, 2),
                            std::vector<std::uint64_t>{2, 2}) == 1.0);
  CHECK_THROWS_AS(overlap_probability(plus_state(2), std::vector<std::uint64_t>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(overlap_probability(plus_state(2), std::vector<std::uint64_t>{4}),
                  std::invalid_argument);
}

TEST_CASE("sampling") {
  const auto basis = sample(StateVector::basis(5, 19), 1000, 3);
  REQUIRE(basis.size() == 1);
  CHECK(basis.begin()->first == 19);
  CHECK(basis.begin()->second == 1000);

  const auto h = sample(plus_state(1), 100000, 7);
  const double sigma = std::sqrt(0.25 / 100000.0);
  for (std::uint64_t b : {0ULL, 1ULL}) {
    const double f = double(h.at(b)) / 100000.0;
    CHECK(std::abs(f - 0.5) <= 4.0 * sigma);
  }
  const auto s = random_state(5, 11);
  CHECK(sample(s, 5000, 42) == sample(s, 5000, 42));
  CHECK_FALSE(sample(s, 5000, 42) == sample(s, 5000, 43));
  CHECK_THROWS_AS(sample(s, 0, 1), std::invalid_argument);
}

TEST_CASE("QAOA layers match the dense-matrix oracle") {
  const Graph g = star_graph(3);
  const auto h = build_ours(g, 2.0);
  const auto d = to_dense(h, 4);
  const std::vector<double> gammas{0.4, 1.1}, betas{0.7, 0.2};
  std::vector<oracle::cplx> ref;
  oracle::qaoa_expectation(oracle::dense(h, 4), 4, gammas, betas, &ref);
  auto s = plus_state(4);
  for (std::size_t k = 0; k < 2; ++k) {
    apply_phase_diagonal(s, d, gammas[k]);
    apply_mixer(s, betas[k]);
  }
  for (std::size_t b = 0; b < 16; ++b)
    CHECK(std::abs(s[b] - ref[b]) < 1e-12);
}

TEST_CASE("state dump round trip") {
  const auto s = random_state(5, 12);
  std::stringstream buf;
  write_state(s, buf);
  CHECK(buf.str().size() == 4 + 32 * 16);
  const auto t = read_state(buf);
  CHECK(max_amplitude_distance(s, t) == 0.0);

  std::stringstream truncated(buf.str().substr(0, 20));
  CHECK_THROWS(read_state(truncated));
}
