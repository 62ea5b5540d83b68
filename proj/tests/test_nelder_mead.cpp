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

#include <cmath>
#include <limits>

#include "mdsqaoa/nelder_mead.hpp"

using namespace mdsqaoa;

namespace {

double rosenbrock(std::span<const double> x) {
  return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
}

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += (x[i] - 0.3 * double(i)) * (x[i] - 0.3 * double(i));
  return s;
}

} // namespace

TEST_CASE("converges on smooth problems") {
  const std::vector<double> lo{-2.0, -2.0}, hi{2.0, 2.0};
  NelderMeadOptions o;
  o.max_iters = 5000;
  o.ftol = 1e-14;
  const auto r = nelder_mead(rosenbrock, {-1.2, 1.0}, lo, hi, o);
  CHECK(r.converged);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-3));

  for (std::size_t dim : {1U, 3U, 8U}) {
    const std::vector<double> l(dim, -5.0), h(dim, 5.0);
    const auto s = nelder_mead(sphere, std::vector<double>(dim, 4.0), l, h, o);
    for (std::size_t i = 0; i < dim; ++i)
      CHECK(s.x[i] == doctest::Approx(0.3 * double(i)).epsilon(1e-4));
  }
}

TEST_CASE("respects the box") {
  // Unconstrained minimum at (0, 0.3) lies outside [0.5, 1] x [0.5, 1].
  const std::vector<double> lo{0.5, 0.5}, hi{1.0, 1.0};
  std::size_t outside = 0;
  auto f = [&](std::span<const double> x) {
    if (x[0] < 0.5 || x[0] > 1.0 || x[1] < 0.5 || x[1] > 1.0)
      ++outside;
    return sphere(x);
  };
  NelderMeadOptions o;
  o.ftol = 1e-12;
  const auto r = nelder_mead(f, {0.9, 0.9}, lo, hi, o);
  CHECK(outside == 0);
  CHECK(r.x[0] == doctest::Approx(0.5));
  CHECK(r.x[1] == doctest::Approx(0.5));
  // A start outside the box is projected first.
  const auto p = nelder_mead(f, {7.0, -3.0}, lo, hi, o);
  CHECK(outside == 0);
  CHECK(p.f <= sphere(std::vector<double>{1.0, 0.5}));
}

TEST_CASE("trace is non-increasing and bounded by the start") {
  const std::vector<double> lo(4, -1.0), hi(4, 1.0);
  const std::vector<double> x0{0.9, -0.8, 0.1, 0.5};
  NelderMeadOptions o;
  o.max_iters = 60;
  const auto r = nelder_mead(sphere, x0, lo, hi, o);
  CHECK(r.iterations <= 60);
  CHECK(r.trace.size() == r.iterations + 1);
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    CHECK(r.trace[i] <= r.trace[i - 1]);
  CHECK(r.f <= sphere(x0));
  CHECK(r.f == r.trace.back());
}

TEST_CASE("stops at the iteration cap") {
  const std::vector<double> lo(6, -5.0), hi(6, 5.0);
  NelderMeadOptions o;
  o.max_iters = 7;
  o.ftol = 1e-300;
  const auto r = nelder_mead(sphere, std::vector<double>(6, 3.0), lo, hi, o);
  CHECK(r.iterations == 7);
  CHECK_FALSE(r.converged);
}

TEST_CASE("deterministic") {
  const std::vector<double> lo{-2.0, -2.0}, hi{2.0, 2.0};
  const auto a = nelder_mead(rosenbrock, {0.1, -1.0}, lo, hi);
  const auto b = nelder_mead(rosenbrock, {0.1, -1.0}, lo, hi);
  CHECK(a.x == b.x);
  CHECK(a.trace == b.trace);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("errors") {
  const std::vector<double> lo{0.0}, hi{1.0};
  auto nan = [](std::span<const double>) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  CHECK_THROWS_AS(nelder_mead(nan, {0.5}, lo, hi), std::runtime_error);
  CHECK_THROWS_AS(nelder_mead(sphere, {}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(nelder_mead(sphere, {0.5, 0.5}, lo, hi),
                  std::invalid_argument);
  CHECK_THROWS_AS(nelder_mead(sphere, {0.5}, hi, lo), std::invalid_argument);
  NelderMeadOptions o;
  o.ftol = 0.0;
  CHECK_THROWS_AS(nelder_mead(sphere, {0.5}, lo, hi, o), std::invalid_argument);
}
