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

#ifndef CAPACITY_FRACCHROM_HPP
#define CAPACITY_FRACCHROM_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "capacity/budget.hpp"
#include "capacity/combinat.hpp"
#include "capacity/graph.hpp"
#include "capacity/rational.hpp"
#include "capacity/simplex.hpp"

namespace capacity {

struct WeightedClique {
  std::vector<Vertex> clique;  ///< sorted
  Rational weight;
};

/// Cover of V(g) by weighted cliques; its value is the fractional chromatic
/// number of the complement when optimal.
struct FractionalCover {
  std::vector<WeightedClique> classes;
  Rational value;
  BigInt d = 1;  ///< least common denominator of the weights
};

struct FractionalCoverResult {
  FractionalCover cover;  ///< always a valid cover; optimal when exact
  Rational lower;         ///< certified lower bound on the optimum
  bool exact = false;
  std::size_t iterations = 0;
};

namespace detail {

inline LinearProgram clique_packing_lp(std::size_t n, const std::vector<std::vector<Vertex>>& cliques) {
  LinearProgram lp;
  lp.objective.assign(n, Rational(1));
  lp.bounds.assign(n, VariableBound::non_negative());
  for (const auto& c : cliques) {
    Constraint row{std::vector<Rational>(n), Relation::less_equal, Rational(1)};
    for (auto v : c) row.coeffs[v] = 1;
    lp.constraints.push_back(std::move(row));
  }
  return lp;
}

inline FractionalCover cover_from_duals(const std::vector<std::vector<Vertex>>& cliques,
                                        const std::vector<Rational>& dual) {
  FractionalCover cover;
  cover.value = 0;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (dual[i] == 0) continue;
    cover.classes.push_back({cliques[i], dual[i]});
    cover.value += dual[i];
    cover.d = lcm(cover.d, denominator(dual[i]));
  }
  return cover;
}

}  // namespace detail

/// Optimal fractional clique cover of g (= chi_f of the complement), by
/// column generation: the clique-packing dual LP is re-solved exactly and a
/// maximum-weight clique under the current vertex prices is added until no
/// clique has price above 1. Seeds with one singleton clique per vertex.
inline FractionalCoverResult fractional_clique_cover(const Graph& g, const Budget& budget = Budget::from_env()) {
  const std::size_t n = g.order();
  FractionalCoverResult out;
  if (n == 0) {
    out.exact = true;
    return out;
  }
  std::vector<std::vector<Vertex>> cliques;
  std::set<std::vector<Vertex>> known;
  for (Vertex v = 0; v < n; ++v) {
    cliques.push_back({v});
    known.insert({v});
  }
  for (;;) {
    ++out.iterations;
    auto lp = detail::clique_packing_lp(n, cliques);
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::optimal) throw error("clique packing LP is not optimal; this is a bug");
    out.cover = detail::cover_from_duals(cliques, sol.dual);
    auto priced = max_weight_clique(g, sol.assignment, budget);
    if (!priced.exact) {
      // Prices scaled by the heaviest clique found are feasible only if that
      // clique is truly heaviest, which a timed-out search cannot certify.
      out.lower = Rational(alpha(g, budget).lower);
      out.exact = false;
      return out;
    }
    if (priced.weight <= 1) {
      out.lower = out.cover.value;
      out.exact = true;
      return out;
    }
    if (!known.insert(priced.vertices).second) throw error("column generation repeated a clique; this is a bug");
    cliques.push_back(priced.vertices);
  }
}

/// Checks every FractionalCover invariant exactly.
inline Verdict verify_cover(const Graph& g, const FractionalCover& c) {
  if (c.d <= 0) return Verdict::fail("denominator d must be positive");
  std::vector<Rational> load(g.order());
  std::vector<BigInt> slots(g.order());
  Rational total = 0;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const auto& wc = c.classes[i];
    if (wc.weight <= 0) return Verdict::fail("class " + std::to_string(i) + " has non-positive weight");
    for (auto v : wc.clique)
      if (v >= g.order()) return Verdict::fail("class " + std::to_string(i) + " has out-of-range vertex");
    if (!is_clique(g, wc.clique)) return Verdict::fail("class " + std::to_string(i) + " is not a clique");
    Rational scaled = wc.weight * Rational(c.d);
    if (denominator(scaled) != 1)
      return Verdict::fail("weight of class " + std::to_string(i) + " is not a multiple of 1/d");
    for (auto v : wc.clique) {
      load[v] += wc.weight;
      slots[v] += numerator(scaled);
    }
    total += wc.weight;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (load[v] < 1) return Verdict::fail("vertex " + std::to_string(v) + " is covered with weight " + to_string(load[v]));
    if (slots[v] < c.d) return Verdict::fail("vertex " + std::to_string(v) + " has fewer than d clique slots");
  }
  if (total != c.value) return Verdict::fail("value " + to_string(c.value) + " differs from weight sum " + to_string(total));
  return Verdict::pass();
}

}  // namespace capacity

#endif  // CAPACITY_FRACCHROM_HPP
