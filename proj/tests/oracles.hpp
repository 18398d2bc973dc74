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

// Test-only helpers: seeded random generators and brute-force oracles that do
// not share code paths with the library routines they check.

#ifndef CAPACITY_TESTS_ORACLES_HPP
#define CAPACITY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "capacity/ffmat.hpp"
#include "capacity/graph.hpp"

namespace oracle {

using capacity::FMatrix;
using capacity::Graph;
using capacity::PrimeModulus;
using capacity::Vertex;

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline FMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  std::uniform_int_distribution<std::int64_t> d(0, p - 1);
  std::vector<std::int64_t> e(r * c);
  for (auto& x : e) x = d(rng);
  return FMatrix(r, c, PrimeModulus(p), e);
}

/// Independence number by enumerating all vertex subsets (n <= 20).
inline std::size_t brute_alpha(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      if ((mask >> u) & 1u)
        for (Vertex v = u + 1; v < n && ok; ++v)
          if (((mask >> v) & 1u) && g.adjacent(u, v)) ok = false;
    if (ok) best = size;
  }
  return best;
}

/// Rank over GF(p) as the size of the largest set of linearly independent
/// rows, found by testing every row subset for a nontrivial vanishing
/// combination (tiny matrices only: rows <= 6, p small).
inline std::size_t brute_rank(const FMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  const std::uint32_t p = m.p();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < r; ++i)
      if ((mask >> i) & 1u) rows.push_back(i);
    if (rows.size() <= best) continue;
    // Independent iff only the zero combination vanishes.
    std::size_t combos = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) combos *= p;
    bool independent = true;
    for (std::size_t code = 1; code < combos && independent; ++code) {
      std::vector<std::uint64_t> coef(rows.size());
      auto x = code;
      for (auto& k : coef) {
        k = x % p;
        x /= p;
      }
      bool vanishes = true;
      for (std::size_t j = 0; j < c && vanishes; ++j) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) s += coef[i] * m(rows[i], j);
        if (s % p != 0) vanishes = false;
      }
      if (vanishes) independent = false;
    }
    if (independent) best = rows.size();
  }
  return best;
}

/// Determinant over GF(p) by the Leibniz expansion (k <= 6).
inline std::uint64_t leibniz_det(const FMatrix& m, const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  const std::uint64_t p = m.p();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::uint64_t pos = 0, neg = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::uint64_t term = 1;
    for (std::size_t i = 0; i < k && term; ++i) term = term * m(rows[i], cols[perm[i]]) % p;
    (inversions % 2 ? neg : pos) += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return (pos % p + p - neg % p) % p;
}

/// Rank as the order of the largest nonvanishing minor.
inline std::size_t minor_rank(const FMatrix& m) {
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1u) s.push_back(i);
        out.push_back(s);
      }
    return out;
  };
  std::size_t r = 0;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    bool found = false;
    for (const auto& rs : subsets(m.rows(), k)) {
      for (const auto& cs : subsets(m.cols(), k))
        if (leibniz_det(m, rs, cs) != 0) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) break;
    r = k;
  }
  return r;
}

/// Minimum rank over every matrix fitting g, by enumerating all p^(2|E|)
/// assignments of the edge entries.
inline std::size_t brute_minrank(const Graph& g, std::uint32_t p) {
  const std::size_t n = g.order();
  std::vector<std::pair<Vertex, Vertex>> cells;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) cells.emplace_back(u, v);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) total *= p;
  std::size_t best = n;
  for (std::uint64_t code = 0; code < total; ++code) {
    FMatrix m = FMatrix::identity(n, PrimeModulus(p));
    auto x = code;
    for (auto [u, v] : cells) {
      m(u, v) = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    best = std::min(best, minor_rank(m));
  }
  return best;
}

}  // namespace oracle

#endif  // CAPACITY_TESTS_ORACLES_HPP
