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
#include "mdsqaoa/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mdsqaoa/kernels.hpp"

namespace mdsqaoa {

namespace {

constexpr double kMergeTolerance = 1e-12;

std::vector<unsigned> bits_of(std::uint64_t mask) {
  std::vector<unsigned> out;
  while (mask) {
    out.push_back(static_cast<unsigned>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

bool canonical_less(const ZTerm &a, const ZTerm &b) {
  if (a.order() != b.order())
    return a.order() < b.order();
  return a.qubits() < b.qubits();
}

// Adds coeff * sum over every subset S of `mask` of Z_S.
void add_subset_sum(std::map<std::uint64_t, double> &acc, std::uint64_t mask,
                    double coeff) {
  std::uint64_t s = mask;
  while (true) {
    acc[s] += coeff;
    if (s == 0)
      break;
    s = (s - 1) & mask;
  }
}

// Shared expansion of -sum_i (1 - x_i) - weight * sum_i OR(C_i).
// The clause objective is the weight = 1 case.
ZSum build_closed_neighborhood_objective(const Graph &g, double weight) {
  std::map<std::uint64_t, double> acc;
  const unsigned n = g.num_vertices();
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t zi = std::uint64_t{1} << i;
    // -(1 - x_i) = -(I + Z_i) / 2
    acc[0] -= 0.5;
    acc[zi] -= 0.5;
    // -weight * [1 - prod_{j in C_i} (I + Z_j) / 2]
    const std::uint64_t closed = g.closed_neighborhood(i);
    acc[0] -= weight;
    add_subset_sum(acc, closed, weight / std::ldexp(1.0, std::popcount(closed)));
  }
  return ZSum(acc);
}

} // namespace

unsigned ZTerm::order() const {
  return static_cast<unsigned>(std::popcount(support));
}

std::vector<unsigned> ZTerm::qubits() const { return bits_of(support); }

bool operator==(const ZTerm &a, const ZTerm &b) {
  return a.coeff == b.coeff && a.support == b.support;
}

ZSum::ZSum(const std::map<std::uint64_t, double> &accumulated) {
  for (auto [support, coeff] : accumulated)
    if (std::abs(coeff) > kMergeTolerance)
      terms_.push_back({coeff, support});
  std::sort(terms_.begin(), terms_.end(), canonical_less);
}

ZSum::ZSum(std::span<const ZTerm> terms) {
  std::map<std::uint64_t, double> acc;
  for (const auto &t : terms)
    acc[t.support] += t.coeff;
  *this = ZSum(acc);
}

double ZSum::constant() const {
  for (const auto &t : terms_)
    if (t.is_identity())
      return t.coeff;
  return 0.0;
}

std::size_t ZSum::num_non_identity() const {
  return static_cast<std::size_t>(std::count_if(
      terms_.begin(), terms_.end(), [](const ZTerm &t) { return !t.is_identity(); }));
}

unsigned ZSum::min_qubits() const {
  std::uint64_t all = 0;
  for (const auto &t : terms_)
    all |= t.support;
  return static_cast<unsigned>(std::bit_width(all));
}

ZSum operator+(const ZSum &a, const ZSum &b) {
  std::map<std::uint64_t, double> acc;
  for (const auto &t : a.terms_)
    acc[t.support] += t.coeff;
  for (const auto &t : b.terms_)
    acc[t.support] += t.coeff;
  return ZSum(acc);
}

DenseDiagonal::DenseDiagonal(unsigned n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n >= 63 || values_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("DenseDiagonal: expected 2^" +
                                std::to_string(n) + " entries");
}

double DenseDiagonal::min() const {
  return *std::min_element(values_.begin(), values_.end());
}

double DenseDiagonal::mean() const {
  double s = 0.0;
  for (double v : values_)
    s += v;
  return s / static_cast<double>(values_.size());
}

std::optional<DiagonalLevels> diagonal_levels(const DenseDiagonal &d) {
  constexpr std::size_t kMaxLevels = std::size_t{1} << 16;
  std::unordered_map<double, std::uint16_t> seen;
  DiagonalLevels out;
  out.index.resize(d.size());
  for (std::size_t b = 0; b < d.size(); ++b) {
    auto [it, fresh] =
        seen.try_emplace(d[b], static_cast<std::uint16_t>(out.values.size()));
    if (fresh) {
      if (out.values.size() == kMaxLevels)
        return std::nullopt;
      out.values.push_back(d[b]);
    }
    out.index[b] = it->second;
  }
  return out;
}

ZSum build_ours(const Graph &g, double lambda) {
  return build_closed_neighborhood_objective(g, lambda);
}

ZSum build_guerrero(const Graph &g) {
  // -C(x) = -sum_k D_k - sum_k T_k, T_k = OR over the closed neighborhood.
  return build_closed_neighborhood_objective(g, 1.0);
}

ZSum build_qubo(const PseudoBoolean &form, unsigned num_qubits) {
  if (form.degree() > 2)
    throw std::invalid_argument("build_qubo: polynomial has degree " +
                                std::to_string(form.degree()) +
                                ", expected at most 2");
  std::map<std::uint64_t, double> acc;
  for (auto [mask, coeff] : form.monomials()) {
    if (num_qubits < 64 && (mask >> num_qubits) != 0)
      throw std::invalid_argument("build_qubo: variable outside the register");
    // prod_{q in mask} (I - Z_q) / 2 = 2^-|mask| sum_{T subset mask} (-1)^|T| Z_T
    const double scale = coeff / std::ldexp(1.0, std::popcount(mask));
    std::uint64_t s = mask;
    while (true) {
      acc[s] += (std::popcount(s) & 1) ? -scale : scale;
      if (s == 0)
        break;
      s = (s - 1) & mask;
    }
  }
  return ZSum(acc);
}

ZSum build_qubo(const Graph &g, const SurplusLayout &layout, double big_p) {
  return build_qubo(qubo_form(g, layout, big_p), layout.register_size());
}

namespace {

void check_supports(const ZSum &h, unsigned n) {
  if (n >= 63)
    throw std::invalid_argument("to_dense: register too large");
  if (h.min_qubits() > n)
    throw std::invalid_argument("to_dense: term support exceeds " +
                                std::to_string(n) + " qubits");
}

} // namespace

DenseDiagonal to_dense(const ZSum &h, unsigned n) {
  check_supports(h, n);
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (const auto &t : h.terms())
    values[t.support] = t.coeff;
  kernels::parallel::walsh_hadamard(values);
  return {n, std::move(values)};
}

DenseDiagonal to_dense_scaled(const ZSum &h, unsigned n,
                              std::span<const double> scales) {
  check_supports(h, n);
  if (scales.size() != h.num_non_identity())
    throw std::invalid_argument("to_dense_scaled: expected " +
                                std::to_string(h.num_non_identity()) +
                                " scales, got " + std::to_string(scales.size()));
  std::vector<double> values(std::size_t{1} << n, 0.0);
  std::size_t k = 0;
  for (const auto &t : h.terms())
    if (!t.is_identity())
      values[t.support] = scales[k++] * t.coeff;
  kernels::parallel::walsh_hadamard(values);
  return {n, std::move(values)};
}

GateEstimate gate_estimate(const ZSum &h) {
  GateEstimate est;
  for (const auto &t : h.terms()) {
    if (t.is_identity())
      continue;
    ++est.rz_count;
    est.cnot_count += 2 * (t.order() - 1);
  }
  return est;
}

std::string to_text(const ZSum &h) {
  std::string out;
  char buf[64];
  for (const auto &t : h.terms()) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, t.coeff);
    out.append(buf, end);
    for (unsigned q : t.qubits()) {
      out += ' ';
      out += std::to_string(q);
    }
    out += '\n';
  }
  return out;
}

ZSum zsum_from_text(std::string_view text) {
  std::vector<ZTerm> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    std::istringstream fields(line);
    ZTerm t;
    if (!(fields >> t.coeff))
      throw std::invalid_argument("zsum_from_text: bad coefficient on line " +
                                  std::to_string(lineno));
    long q;
    while (fields >> q) {
      if (q < 0 || q >= 64)
        throw std::invalid_argument("zsum_from_text: qubit index out of range "
                                    "on line " + std::to_string(lineno));
      const std::uint64_t bit = std::uint64_t{1} << q;
      if (t.support & bit)
        throw std::invalid_argument("zsum_from_text: repeated qubit on line " +
                                    std::to_string(lineno));
      t.support |= bit;
    }
    if (!fields.eof())
      throw std::invalid_argument("zsum_from_text: trailing garbage on line " +
                                  std::to_string(lineno));
    terms.push_back(t);
  }
  return ZSum(terms);
}

} // namespace mdsqaoa
