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
#include "mdsqaoa/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mdsqaoa {

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0,
                             std::span<const double> lower,
                             std::span<const double> upper,
                             const NelderMeadOptions &opts) {
  const std::size_t dim = x0.size();
  if (dim == 0)
    throw std::invalid_argument("nelder_mead: empty parameter vector");
  if (lower.size() != dim || upper.size() != dim)
    throw std::invalid_argument("nelder_mead: bound size mismatch");
  if (opts.max_iters < 1 || !(opts.ftol > 0.0))
    throw std::invalid_argument("nelder_mead: need max_iters >= 1, ftol > 0");
  for (std::size_t i = 0; i < dim; ++i)
    if (!(lower[i] <= upper[i]))
      throw std::invalid_argument("nelder_mead: empty box");

  const double nd = static_cast<double>(dim);
  // The adaptive shrink factor is 0 in one dimension; use the plain values.
  const bool adaptive = opts.adaptive && dim >= 2;
  const double alpha = 1.0;
  const double gamma = adaptive ? 1.0 + 2.0 / nd : 2.0;
  const double rho = adaptive ? 0.75 - 0.5 / nd : 0.5;
  const double sigma = adaptive ? 1.0 - 1.0 / nd : 0.5;

  NelderMeadResult res;
  auto clamp = [&](std::vector<double> &p) {
    for (std::size_t i = 0; i < dim; ++i)
      p[i] = std::clamp(p[i], lower[i], upper[i]);
  };
  auto eval = [&](const std::vector<double> &p) {
    const double v = f(p);
    ++res.evaluations;
    if (!std::isfinite(v))
      throw std::runtime_error("nelder_mead: objective returned a non-finite "
                               "value");
    return v;
  };

  clamp(x0);
  std::vector<std::vector<double>> pts(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) {
    const double step = opts.initial_step * (upper[i] - lower[i]);
    double &c = pts[i + 1][i];
    c = (c + step <= upper[i]) ? c + step : c - step;
  }
  std::vector<double> fv(dim + 1);
  for (std::size_t j = 0; j <= dim; ++j)
    fv[j] = eval(pts[j]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> p2(dim + 1);
    std::vector<double> f2(dim + 1);
    for (std::size_t k = 0; k <= dim; ++k) {
      p2[k] = std::move(pts[order[k]]);
      f2[k] = fv[order[k]];
    }
    pts.swap(p2);
    fv.swap(f2);
  };
  auto along = [&](std::vector<double> &out, const std::vector<double> &from,
                   double t) {
    // centroid + t * (from - centroid)
    for (std::size_t i = 0; i < dim; ++i)
      out[i] = centroid[i] + t * (from[i] - centroid[i]);
    clamp(out);
  };

  sort_simplex();
  res.trace.push_back(fv[0]);
  while (res.iterations < opts.max_iters) {
    if (fv[dim] - fv[0] <= opts.ftol) {
      res.converged = true;
      break;
    }
    ++res.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i)
        centroid[i] += pts[j][i];
    for (auto &c : centroid)
      c /= nd;

    along(xr, pts[dim], -alpha);
    const double fr = eval(xr);
    if (fr < fv[0]) {
      along(xe, pts[dim], -alpha * gamma);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[dim] = xe;
        fv[dim] = fe;
      } else {
        pts[dim] = xr;
        fv[dim] = fr;
      }
    } else if (fr < fv[dim - 1]) {
      pts[dim] = xr;
      fv[dim] = fr;
    } else {
      bool accepted = false;
      if (fr < fv[dim]) {
        along(xc, xr, rho); // outside contraction
        const double fc = eval(xc);
        if (fc <= fr) {
          pts[dim] = xc;
          fv[dim] = fc;
          accepted = true;
        }
      } else {
        along(xc, pts[dim], rho); // inside contraction
        const double fc = eval(xc);
        if (fc < fv[dim]) {
          pts[dim] = xc;
          fv[dim] = fc;
          accepted = true;
        }
      }
      if (!accepted) {
        for (std::size_t j = 1; j <= dim; ++j) {
          for (std::size_t i = 0; i < dim; ++i)
            pts[j][i] = pts[0][i] + sigma * (pts[j][i] - pts[0][i]);
          clamp(pts[j]);
          fv[j] = eval(pts[j]);
        }
      }
    }
    sort_simplex();
    res.trace.push_back(fv[0]);
  }

  res.x = pts[0];
  res.f = fv[0];
  return res;
}

} // namespace mdsqaoa
