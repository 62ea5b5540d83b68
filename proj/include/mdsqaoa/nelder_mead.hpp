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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace mdsqaoa {

struct NelderMeadOptions {
  std::size_t max_iters = 1000;
  /// Stop once f(worst vertex) - f(best vertex) <= ftol.
  double ftol = 1e-6;
  /// Initial simplex edge, as a fraction of each coordinate's box width.
  double initial_step = 0.1;
  /// Dimension-dependent coefficients (Gao & Han, 2012); plain
  /// 1 / 2 / 0.5 / 0.5 otherwise and in one dimension.
  bool adaptive = true;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
  /// Best value after each iteration (the first entry is the initial simplex).
  std::vector<double> trace;
};

using Objective = std::function<double(std::span<const double>)>;

/// Box-constrained Nelder-Mead. Every trial point is projected onto
/// [lower, upper] before evaluation, so the returned point is feasible and
/// never worse than f(x0). Throws std::runtime_error on a non-finite value.
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0,
                             std::span<const double> lower,
                             std::span<const double> upper,
                             const NelderMeadOptions &opts = {});

} // namespace mdsqaoa
