// Copyright 2026 The capacity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPACITY_GENERATORS_HPP
#define CAPACITY_GENERATORS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "capacity/ffmat.hpp"
#include "capacity/graph.hpp"
#include "capacity/rational.hpp"

namespace capacity {

using Subset = std::uint64_t;

/// All k-subsets of {0..n-1} as bitmasks, in lexicographic order of their
/// sorted element lists.
inline std::vector<Subset> k_subsets(std::size_t n, std::size_t k, std::size_t limit) {
  if (n > 64) throw precondition_error("subset ground set is limited to 64 elements");
  if (k > n) return {};
  auto count = binomial(static_cast<long long>(n), static_cast<long long>(k));
  if (count > limit)
    throw guard_exceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + count.str() +
                         " exceeds the vertex limit " + std::to_string(limit));
  std::vector<Subset> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Subset s = 0;
    for (auto i : idx) s |= Subset{1} << i;
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline std::string subset_label(Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 64; ++i)
    if ((s >> i) & 1u) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

inline Subset subset_from_label(const std::string& label) {
  Subset s = 0;
  std::size_t i = 0;
  while (i < label.size()) {
    if (label[i] >= '0' && label[i] <= '9') {
      std::size_t j = i;
      while (j < label.size() && label[j] >= '0' && label[j] <= '9') ++j;
      s |= Subset{1} << std::stoul(label.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return s;
}

namespace detail {

template <class Adjacent>
Graph subset_graph(std::size_t n, std::size_t k, const GraphLimits& limits, Adjacent adjacent) {
  auto sets = k_subsets(n, k, limits.max_vertices);
  Graph g(sets.size());
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if (adjacent(static_cast<std::size_t>(std::popcount(sets[a] & sets[b])))) g.add_edge(a, b);
  std::vector<std::string> labels;
  labels.reserve(sets.size());
  for (auto s : sets) labels.push_back(subset_label(s));
  g.set_labels(std::move(labels));
  return g;
}

}  // namespace detail

/// (p+1)-subsets of [n]; X ~ Y when |X n Y| is nonzero mod p.
inline Graph johnson_graph(std::uint32_t p, std::size_t n, const GraphLimits& limits = {}) {
  PrimeModulus mod(p);
  return detail::subset_graph(n, p + 1, limits, [&](std::size_t meet) { return meet % mod.value() != 0; });
}

/// (pq-1)-subsets of [n]; X ~ Y when |X n Y| = -1 mod p.
inline Graph alon_graph(std::uint32_t p, std::uint32_t q, std::size_t n, const GraphLimits& limits = {}) {
  PrimeModulus pm(p);
  PrimeModulus qm(q);
  const std::size_t k = static_cast<std::size_t>(pm.value()) * qm.value() - 1;
  return detail::subset_graph(n, k, limits, [&](std::size_t meet) { return (meet + 1) % p == 0; });
}

struct UniversalLimits {
  std::uint64_t max_candidates = 10'000'000;
  GraphLimits graph;
};

/// Vertices of the universal graph: every pair (A, B) of n x d matrices over
/// GF(p) with A^T B = I_d, ordered lexicographically by (entries of A, entries of B).
inline std::vector<std::pair<FMatrix, FMatrix>> universal_vertices(std::uint32_t p, std::size_t n, std::size_t d,
                                                                   const UniversalLimits& limits = {}) {
  PrimeModulus mod(p);
  if (d == 0 || d > n) throw precondition_error("universal graph needs 1 <= d <= n");
  const std::size_t cells = n * d;
  long double per_side = 1;
  for (std::size_t i = 0; i < cells; ++i) per_side *= p;
  if (per_side * per_side > static_cast<long double>(limits.max_candidates))
    throw guard_exceeded("universal graph enumeration of p^(2nd) candidate pairs exceeds " +
                         std::to_string(limits.max_candidates));
  const auto side = static_cast<std::uint64_t>(per_side);

  auto decode = [&](std::uint64_t code) {
    std::vector<std::int64_t> e(cells);
    for (std::size_t i = cells; i-- > 0;) {
      e[i] = static_cast<std::int64_t>(code % p);
      code /= p;
    }
    return FMatrix(n, d, mod, e);
  };
  std::vector<FMatrix> all;
  all.reserve(side);
  for (std::uint64_t c = 0; c < side; ++c) all.push_back(decode(c));
  std::vector<FMatrix> transposed;
  transposed.reserve(side);
  for (const auto& a : all) transposed.push_back(a.transpose());

  const auto id = FMatrix::identity(d, mod);
  std::vector<std::pair<FMatrix, FMatrix>> out;
  for (std::uint64_t a = 0; a < side; ++a)
    for (std::uint64_t b = 0; b < side; ++b)
      if (matmul(transposed[a], all[b]) == id) {
        out.emplace_back(all[a], all[b]);
        if (out.size() > limits.graph.max_vertices)
          throw guard_exceeded("universal graph exceeds the vertex limit " +
                               std::to_string(limits.graph.max_vertices));
      }
  return out;
}

inline std::string matrix_label(const FMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ' ';
      s += std::to_string(m(i, j));
    }
  }
  return s + "]";
}

/// (A,B) and (C,D) are non-adjacent exactly when A^T D = C^T B = O_d.
inline Graph universal_graph(std::uint32_t p, std::size_t n, std::size_t d, const UniversalLimits& limits = {}) {
  auto verts = universal_vertices(p, n, d, limits);
  Graph g(verts.size());
  std::vector<FMatrix> at;
  at.reserve(verts.size());
  for (const auto& [a, b] : verts) at.push_back(a.transpose());
  for (std::size_t u = 0; u < verts.size(); ++u)
    for (std::size_t v = u + 1; v < verts.size(); ++v)
      if (!matmul(at[u], verts[v].second).is_zero() || !matmul(at[v], verts[u].second).is_zero()) g.add_edge(u, v);
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (const auto& [a, b] : verts) labels.push_back("(" + matrix_label(a) + "," + matrix_label(b) + ")");
  g.set_labels(std::move(labels));
  return g;
}

}  // namespace capacity

#endif  // CAPACITY_GENERATORS_HPP
