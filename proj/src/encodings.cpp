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
#include "mdsqaoa/encodings.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mdsqaoa {

void PenaltyConfig::validate() const {
  if (!(lambda > 1.0))
    throw std::invalid_argument("penalty lambda must be > 1");
  if (!(big_p > 1.0))
    throw std::invalid_argument("penalty P must be > 1");
}

namespace {

unsigned floor_log2(unsigned d) { return std::bit_width(d) - 1; }

} // namespace

SurplusLayout dinneen_layout(const Graph &g) {
  SurplusLayout layout;
  layout.kind = QuboKind::Dinneen;
  layout.num_vertices = g.num_vertices();
  layout.per_vertex.resize(g.num_vertices());
  unsigned next = g.num_vertices();
  for (unsigned v = 0; v < g.num_vertices(); ++v) {
    const unsigned d = g.degree(v);
    if (d == 0)
      continue;
    for (unsigned k = 0; k <= floor_log2(d); ++k)
      layout.per_vertex[v].push_back({next++, std::ldexp(1.0, int(k))});
  }
  layout.total_aux = next - g.num_vertices();
  return layout;
}

SurplusLayout pan_layout(const Graph &g) {
  SurplusLayout layout;
  layout.kind = QuboKind::Pan;
  layout.num_vertices = g.num_vertices();
  layout.per_vertex.resize(g.num_vertices());
  unsigned next = g.num_vertices();
  for (unsigned v = 0; v < g.num_vertices(); ++v) {
    const unsigned d = g.degree(v);
    if (d < 2)
      continue;
    const unsigned top = floor_log2(d);
    for (unsigned k = 0; k < top; ++k)
      layout.per_vertex[v].push_back({next++, std::ldexp(1.0, int(k))});
    layout.per_vertex[v].push_back(
        {next++, double(d + 1) - std::ldexp(1.0, int(top))});
  }
  layout.total_aux = next - g.num_vertices();
  return layout;
}

SurplusLayout make_layout(const Graph &g, QuboKind kind) {
  return kind == QuboKind::Dinneen ? dinneen_layout(g) : pan_layout(g);
}

nlohmann::json to_json(const SurplusLayout &layout) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto &vars : layout.per_vertex) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto &s : vars)
      row.push_back({{"index", s.index}, {"coeff", s.coeff}});
    vertices.push_back(std::move(row));
  }
  return {{"kind", layout.kind == QuboKind::Dinneen ? "dinneen" : "pan"},
          {"num_vertices", layout.num_vertices},
          {"total_aux", layout.total_aux},
          {"surplus", std::move(vertices)}};
}

int or_identity(std::span<const int> bits) {
  if (bits.empty())
    throw std::invalid_argument("or_identity: empty input");
  int prod = 1;
  for (int b : bits) {
    if (b != 0 && b != 1)
      throw std::invalid_argument("or_identity: inputs must be 0 or 1");
    prod *= 1 - b;
  }
  return 1 - prod;
}

double cost_ours(const Graph &g, std::uint64_t x, double lambda) {
  const unsigned n = g.num_vertices();
  double unselected = 0.0;
  double dominated = 0.0;
  for (unsigned i = 0; i < n; ++i) {
    const double xi = double((x >> i) & 1U);
    unselected += 1.0 - xi;
    double prod = 1.0 - xi;
    for (unsigned j : g.neighbors(i))
      prod *= 1.0 - double((x >> j) & 1U);
    dominated += 1.0 - prod;
  }
  return -unselected - lambda * dominated;
}

double cost_ours(const Graph &g, const Bitstring &x, double lambda) {
  if (x.width() != g.num_vertices())
    throw std::invalid_argument("cost_ours: bitstring length does not match n");
  return cost_ours(g, x.bits(), lambda);
}

double cost_qubo(const Graph &g, const SurplusLayout &layout, std::uint64_t z,
                 double big_p) {
  if (layout.num_vertices != g.num_vertices() ||
      layout.per_vertex.size() != g.num_vertices())
    throw std::invalid_argument("cost_qubo: layout built for another graph");
  const unsigned n = g.num_vertices();
  auto bit = [z](unsigned q) { return double((z >> q) & 1U); };

  double selected = 0.0;
  double penalty = 0.0;
  for (unsigned i = 0; i < n; ++i) {
    selected += bit(i);
    if (layout.kind == QuboKind::Pan && g.degree(i) == 1) {
      const unsigned j = g.neighbors(i).front();
      const double r = 1.0 - (bit(i) + bit(j)) + bit(i) * bit(j);
      penalty += r * r;
      continue;
    }
    double r = 1.0 - bit(i);
    for (unsigned j : g.neighbors(i))
      r -= bit(j);
    for (const auto &s : layout.per_vertex[i])
      r += s.coeff * bit(s.index);
    penalty += r * r;
  }
  return selected + big_p * penalty;
}

namespace {

double cost_qubo_checked(const Graph &g, QuboKind kind, const Bitstring &z,
                         double big_p, const char *who) {
  const auto layout = make_layout(g, kind);
  if (z.width() != layout.register_size())
    throw std::invalid_argument(std::string(who) + ": register has " +
                                std::to_string(z.width()) + " bits, layout needs " +
                                std::to_string(layout.register_size()));
  return cost_qubo(g, layout, z.bits(), big_p);
}

} // namespace

double cost_dinneen(const Graph &g, const Bitstring &z, double big_p) {
  return cost_qubo_checked(g, QuboKind::Dinneen, z, big_p, "cost_dinneen");
}

double cost_pan(const Graph &g, const Bitstring &z, double big_p) {
  return cost_qubo_checked(g, QuboKind::Pan, z, big_p, "cost_pan");
}

double cost_guerrero(const Graph &g, std::uint64_t x) {
  double c = 0.0;
  for (unsigned k = 0; k < g.num_vertices(); ++k) {
    if (g.closed_neighborhood(k) & x)
      c += 1.0;
    if (((x >> k) & 1U) == 0)
      c += 1.0;
  }
  return c;
}

double cost_guerrero(const Graph &g, const Bitstring &x) {
  if (x.width() != g.num_vertices())
    throw std::invalid_argument(
        "cost_guerrero: bitstring length does not match n");
  return cost_guerrero(g, x.bits());
}

QubitCounts qubit_counts(const Graph &g) {
  const unsigned n = g.num_vertices();
  return {n, dinneen_layout(g).register_size(), pan_layout(g).register_size(),
          2 * n};
}

PseudoBoolean::PseudoBoolean(double constant) {
  terms_[0] = constant;
  prune();
}

PseudoBoolean PseudoBoolean::variable(unsigned index, double coeff) {
  if (index >= 64)
    throw std::invalid_argument("PseudoBoolean: variable index >= 64");
  PseudoBoolean p;
  p.terms_[std::uint64_t{1} << index] = coeff;
  p.prune();
  return p;
}

PseudoBoolean &PseudoBoolean::operator+=(const PseudoBoolean &rhs) {
  for (auto [m, c] : rhs.terms_)
    terms_[m] += c;
  prune();
  return *this;
}

PseudoBoolean &PseudoBoolean::operator-=(const PseudoBoolean &rhs) {
  for (auto [m, c] : rhs.terms_)
    terms_[m] -= c;
  prune();
  return *this;
}

PseudoBoolean &PseudoBoolean::operator*=(double s) {
  for (auto &[m, c] : terms_)
    c *= s;
  prune();
  return *this;
}

PseudoBoolean operator*(const PseudoBoolean &a, const PseudoBoolean &b) {
  PseudoBoolean out;
  for (auto [ma, ca] : a.terms_)
    for (auto [mb, cb] : b.terms_)
      out.terms_[ma | mb] += ca * cb;
  out.prune();
  return out;
}

unsigned PseudoBoolean::degree() const {
  unsigned d = 0;
  for (const auto &[m, c] : terms_)
    d = std::max(d, static_cast<unsigned>(std::popcount(m)));
  return d;
}

double PseudoBoolean::evaluate(std::uint64_t z) const {
  double v = 0.0;
  for (auto [m, c] : terms_)
    if ((z & m) == m)
      v += c;
  return v;
}

void PseudoBoolean::prune() {
  std::erase_if(terms_, [](const auto &kv) { return std::abs(kv.second) < 1e-12; });
}

PseudoBoolean qubo_form(const Graph &g, const SurplusLayout &layout,
                        double big_p) {
  if (layout.num_vertices != g.num_vertices())
    throw std::invalid_argument("qubo_form: layout built for another graph");
  PseudoBoolean f;
  for (unsigned i = 0; i < g.num_vertices(); ++i) {
    f += PseudoBoolean::variable(i);
    PseudoBoolean residual;
    if (layout.kind == QuboKind::Pan && g.degree(i) == 1) {
      const auto xi = PseudoBoolean::variable(i);
      const auto xj = PseudoBoolean::variable(g.neighbors(i).front());
      residual = PseudoBoolean(1.0) - xi - xj + xi * xj;
    } else {
      residual = PseudoBoolean(1.0) - PseudoBoolean::variable(i);
      for (unsigned j : g.neighbors(i))
        residual -= PseudoBoolean::variable(j);
      for (const auto &s : layout.per_vertex[i])
        residual += PseudoBoolean::variable(s.index, s.coeff);
    }
    f += residual * residual * big_p;
  }
  return f;
}

} // namespace mdsqaoa
