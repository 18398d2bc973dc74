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

// Randomized certificate builders shared by the unit and acceptance tests.

#ifndef CAPACITY_TESTS_FIXTURES_HPP
#define CAPACITY_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "capacity/hfrac.hpp"
#include "oracles.hpp"

namespace fixture {

using namespace capacity;

inline FMatrix random_invertible(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  for (;;) {
    auto m = oracle::random_matrix(rng, n, n, p);
    if (rank(m) == n) return m;
  }
}

/// A verified pair representation of g: a fractional-cover representation
/// factored into pairs, padded with random extra coordinates, with each A_v
/// (and B_v) rotated by a random invertible d x d matrix and the whole space
/// by a random invertible change of basis.
inline PairRep random_pairrep(std::mt19937_64& rng, const Graph& g, std::uint32_t p) {
  PrimeModulus mod(p);
  auto cover = fractional_clique_cover(g, Budget());
  auto base = pairrep_from_drep(drep_from_fractional_cover(g, cover.cover, p));
  std::uniform_int_distribution<std::size_t> extra_dist(0, 2);
  const std::size_t extra = extra_dist(rng);
  const std::size_t n = base.n + extra;
  auto basis = random_invertible(rng, n, p);
  auto basis_inv_t = inverse(basis).transpose();
  PairRep out{n, base.d, {}, {}};
  for (Vertex v = 0; v < g.order(); ++v) {
    FMatrix a(n, base.d, mod), b(n, base.d, mod);
    auto pad = oracle::random_matrix(rng, n, base.d, p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < base.d; ++j) {
        a(i, j) = i < base.n ? base.a[v](i, j) : pad(i, j);
        b(i, j) = i < base.n ? base.b[v](i, j) : 0;
      }
    auto t = random_invertible(rng, base.d, p);
    auto t_inv_t = inverse(t).transpose();
    out.a.push_back(matmul(basis, matmul(a, t)));
    out.b.push_back(matmul(basis_inv_t, matmul(b, t_inv_t)));
  }
  return out;
}

/// All subsets of {0..n-1} with at most k elements, as sorted vectors.
inline std::vector<std::vector<Vertex>> small_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (static_cast<std::size_t>(__builtin_popcount(mask)) <= k) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.push_back(v);
      out.push_back(std::move(s));
    }
  return out;
}

/// Runs linind_check on every admissible (S, T) with |S|, |T| <= 3; returns
/// the number of pairs checked, or -1 on the first failure.
inline long long check_all_linind(const PairRep& rep, const Graph& g) {
  auto subsets = small_subsets(g.order(), 3);
  long long count = 0;
  for (const auto& s : subsets) {
    if (!is_independent_set(g, s)) continue;
    for (const auto& t : subsets) {
      bool ok = true;
      for (auto u : s)
        for (auto v : t)
          if (u == v || g.adjacent(u, v)) ok = false;
      if (!ok) continue;
      if (!linind_check(rep, g, s, t)) return -1;
      ++count;
    }
  }
  return count;
}

}  // namespace fixture

#endif  // CAPACITY_TESTS_FIXTURES_HPP
