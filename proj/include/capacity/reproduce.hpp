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

#ifndef CAPACITY_REPRODUCE_HPP
#define CAPACITY_REPRODUCE_HPP

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "capacity/combinat.hpp"
#include "capacity/fracchrom.hpp"
#include "capacity/graph_expr.hpp"
#include "capacity/haemers.hpp"
#include "capacity/hfrac.hpp"
#include "capacity/theta.hpp"

namespace capacity {

struct ClaimOutcome {
  bool pass = false;
  std::string value;
  std::string expected;
};

struct ClaimResult {
  int id = 0;
  std::string title;
  std::string anchor;
  bool skipped = false;
  bool pass = false;
  std::string value;
  std::string expected;
  double runtime_ms = 0;
  double limit_ms = 0;
};

struct ReproduceOptions {
  bool quick = false;  ///< skip the 56-vertex independence search
  std::uint64_t seed = 0;
};

namespace detail {

template <class Rng>
Graph random_graph(Rng& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

template <class Rng>
RankRRep random_rankrrep(Rng& rng, const Graph& g, std::size_t r, PrimeModulus mod) {
  std::uniform_int_distribution<std::size_t> extra(0, 2);
  std::vector<std::size_t> sizes;
  for (Vertex v = 0; v < g.order(); ++v) sizes.push_back(r + extra(rng));
  auto off = block_offsets(sizes);
  auto m = random_matrix(rng, off.back(), off.back(), mod);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) {
      if (u == v) {
        while (rank(m.block(off[v], off[v], sizes[v], sizes[v])) < r) {
          auto blk = random_matrix(rng, sizes[v], sizes[v], mod);
          for (std::size_t i = 0; i < sizes[v]; ++i)
            for (std::size_t j = 0; j < sizes[v]; ++j) m(off[v] + i, off[v] + j) = blk(i, j);
        }
      } else if (!g.adjacent(u, v)) {
        for (std::size_t i = 0; i < sizes[u]; ++i)
          for (std::size_t j = 0; j < sizes[v]; ++j) m(off[u] + i, off[v] + j) = 0;
      }
    }
  return RankRRep{r, std::move(sizes), std::move(m)};
}

struct Claim {
  int id;
  std::string title;
  std::string anchor;
  double limit_ms;
  std::function<ClaimOutcome(const ReproduceOptions&)> run;
};

inline std::vector<Claim> claims() {
  std::vector<Claim> out;
  out.push_back({1, "theta(C5) = sqrt(5) by the circulant formula", "pentagon theta", 1, [](const ReproduceOptions&) {
                   double t = theta_circulant(5, {1, 4});
                   char buf[64];
                   std::snprintf(buf, sizeof buf, "%.12f", t);
                   return ClaimOutcome{std::abs(t - std::sqrt(5.0)) <= 1e-9, buf, "2.236067977500 (tol 1e-9)"};
                 }});
  out.push_back({2, "theta(J_n^2) LP equals n(n-2)(2n-11)/(3(3n-14)) for n = 8, 10, 12, 16", "Johnson theta LP",
                 4000, [](const ReproduceOptions&) {
                   std::vector<std::string> got, want;
                   bool ok = true;
                   for (long long n : {8, 10, 12, 16}) {
                     auto lp = theta_johnson_lp(2, n);
                     auto f = theta_johnson2_formula(n);
                     ok = ok && lp == f;
                     got.push_back(to_string(lp));
                     want.push_back(to_string(f));
                   }
                   return ClaimOutcome{ok, join(got), join(want)};
                 }});
  out.push_back({3, "fractional clique cover of C_{2k+1} is k + 1/2 for k = 2..5", "odd cycle fractional cover",
                 4000, [](const ReproduceOptions&) {
                   std::vector<std::string> got, want;
                   bool ok = true;
                   for (std::size_t k = 2; k <= 5; ++k) {
                     auto r = fractional_clique_cover(cycle_graph(2 * k + 1), Budget());
                     Rational e(static_cast<long long>(2 * k + 1), 2);
                     ok = ok && r.exact && r.cover.value == e && verify_cover(cycle_graph(2 * k + 1), r.cover);
                     got.push_back(to_string(r.cover.value));
                     want.push_back(to_string(e));
                   }
                   return ClaimOutcome{ok, join(got), join(want)};
                 }});
  out.push_back({4, "H(J_8^2; GF(2)) = 8: incidence certificate of rank 8 and alpha = 8", "Johnson minrank", 60000,
                 [](const ReproduceOptions& o) {
                   auto g = generate("johnson:2,8");
                   auto cert = johnson_certificate(2, 8);
                   bool ok = verify_certificate(g, cert).ok && cert.claimed_rank == 8;
                   std::string value = "rank " + std::to_string(cert.claimed_rank);
                   if (!o.quick) {
                     auto a = alpha(g, Budget());
                     ok = ok && a.exact && a.lower == 8 && is_independent_set(g, a.witness);
                     value += ", alpha " + std::to_string(a.lower);
                   } else {
                     value += ", alpha skipped";
                   }
                   return ClaimOutcome{ok, value, o.quick ? "rank 8" : "rank 8, alpha 8"};
                 }});
  out.push_back({5, "minrank of C5 is 3 over GF(2) and GF(3) by exhaustion", "pentagon minrank", 10000,
                 [](const ReproduceOptions&) {
                   std::vector<std::string> got;
                   bool ok = true;
                   for (std::uint32_t p : {2u, 3u}) {
                     auto r = minrank_exact(cycle_graph(5), p, {}, Budget());
                     ok = ok && r.exact && r.upper == 3 && verify_certificate(cycle_graph(5), r.witness);
                     got.push_back(std::to_string(r.upper));
                   }
                   return ClaimOutcome{ok, join(got), "3, 3"};
                 }});
  out.push_back({6, "C5 x C5 has a clique partition into 8 cliques; its fit matrix has rank 8", "pentagon square cover",
                 60000, [](const ReproduceOptions&) {
                   auto g = generate("strong(cycle:5,cycle:5)");
                   auto c = clique_cover_leq(g, 8, Budget());
                   if (c.status != SearchStatus::found) return ClaimOutcome{false, "not found", "8"};
                   auto cert = cover_certificate(g, c.cover, 2);
                   bool ok = verify_certificate(g, cert).ok && cert.claimed_rank == 8 && c.cover.size() == 8;
                   return ClaimOutcome{ok, std::to_string(cert.claimed_rank), "8"};
                 }});
  out.push_back({7, "cycle representations have ratio exactly (2k+1)/2 >= alpha = k", "odd cycle representation",
                 12000, [](const ReproduceOptions&) {
                   bool ok = true;
                   std::vector<std::string> got;
                   for (std::size_t k = 2; k <= 5; ++k)
                     for (std::uint32_t p : {2u, 3u, 5u}) {
                       auto g = cycle_graph(2 * k + 1);
                       auto rep = cycle_drep(k, p);
                       auto r = ratio_of(rep);
                       ok = ok && verify_drep(g, rep).ok && r == Rational(static_cast<long long>(2 * k + 1), 2) &&
                            r >= Rational(static_cast<long long>(alpha(g, Budget()).lower));
                       if (p == 2) got.push_back("[" + std::to_string(k) + ", " + to_string(r) + "]");
                     }
                   return ClaimOutcome{ok, join(got), "[2, 5/2], [3, 7/2], [4, 9/2], [5, 11/2]"};
                 }});
  out.push_back({8, "tensor of two (5,2) cycle representations has rank 25, d = 4; triple has ratio 125/8",
                 "certificate tensor product", 5000, [](const ReproduceOptions&) {
                   auto c = cycle_drep(2, 2);
                   auto sq = tensor_dreps(c, c);
                   auto cube = tensor_dreps(sq, c);
                   bool ok = verify_drep(generate("strong(cycle:5,cycle:5)"), sq).ok && rank(sq.matrix) == 25 &&
                             sq.d == 4 && ratio_of(cube) == Rational(125, 8) &&
                             verify_drep(generate("strong(strong(cycle:5,cycle:5),cycle:5)"), cube).ok;
                   return ClaimOutcome{ok,
                                       "rank " + std::to_string(rank(sq.matrix)) + " d " + std::to_string(sq.d) +
                                           ", ratio " + to_string(ratio_of(cube)),
                                       "rank 25 d 4, ratio 125/8"};
                 }});
  out.push_back({9, "polynomial certificates for alon:2,3,7 (rank <= 8 over GF(2)) and its complement (<= 29 over GF(3))",
                 "Alon polynomial representation", 10000, [](const ReproduceOptions&) {
                   auto g = generate("alon:2,3,7");
                   auto p = alon_certificate(AlonVariant::P, 2, 3, 7, 2);
                   auto q = alon_certificate(AlonVariant::Q, 2, 3, 7, 3);
                   bool ok = verify_certificate(g, p.fit).ok && p.fit.claimed_rank <= 8 &&
                             verify_certificate(complement(g), q.fit).ok && q.fit.claimed_rank <= 29 &&
                             verify_polyrep(g, p.poly).ok && verify_polyrep(complement(g), q.poly).ok;
                   return ClaimOutcome{ok,
                                       std::to_string(p.fit.claimed_rank) + ", " + std::to_string(q.fit.claimed_rank),
                                       "<= 8, <= 29"};
                 }});
  out.push_back({10, "universal graphs over GF(2), d = 1: alpha = n and 6, 28 vertices for n = 2, 3",
                 "universal graph", 5000, [](const ReproduceOptions&) {
                   std::vector<std::string> got;
                   bool ok = true;
                   for (std::size_t n : {2u, 3u}) {
                     auto g = universal_graph(2, n, 1);
                     auto a = alpha(g, Budget());
                     ok = ok && a.lower == n && a.exact;
                     got.push_back(std::to_string(g.order()) + " vertices alpha " + std::to_string(a.lower));
                   }
                   ok = ok && got[0].rfind("6 ", 0) == 0 && got[1].rfind("28 ", 0) == 0;
                   return ClaimOutcome{ok, join(got), "6 vertices alpha 2, 28 vertices alpha 3"};
                 }});
  out.push_back({11, "independence of non-adjacent subspace sums on 100 random verified pair representations",
                 "subspace independence", 60000, [](const ReproduceOptions& o) {
                   std::mt19937_64 rng(o.seed + 11);
                   std::uniform_int_distribution<std::size_t> size(1, 7), k(2, 3), extra(0, 2);
                   long long pairs = 0;
                   bool ok = true;
                   for (int t = 0; t < 100 && ok; ++t) {
                     auto g = t % 3 == 0 ? cycle_graph(2 * k(rng) + 1) : random_graph(rng, size(rng), 0.4);
                     const std::uint32_t p = t % 2 ? 3 : 2;
                     auto cover = fractional_clique_cover(g, Budget());
                     auto base = pairrep_from_drep(drep_from_fractional_cover(g, cover.cover, p));
                     auto rep = randomize_pairrep(base, rng, extra(rng));
                     if (!verify_pairrep(g, rep)) {
                       ok = false;
                       break;
                     }
                     std::vector<std::vector<Vertex>> subsets;
                     for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask)
                       if (std::popcount(mask) <= 3) {
                         std::vector<Vertex> s;
                         for (Vertex v = 0; v < g.order(); ++v)
                           if ((mask >> v) & 1u) s.push_back(v);
                         subsets.push_back(std::move(s));
                       }
                     for (const auto& s : subsets) {
                       if (!is_independent_set(g, s)) continue;
                       for (const auto& tt : subsets) {
                         bool admissible = true;
                         for (auto u : s)
                           for (auto v : tt)
                             if (u == v || g.adjacent(u, v)) admissible = false;
                         if (!admissible) continue;
                         ++pairs;
                         if (!linind_check(rep, g, s, tt)) ok = false;
                       }
                     }
                   }
                   return ClaimOutcome{ok, std::to_string(pairs) + " (S,T) pairs checked, " + (ok ? "all" : "not all") +
                                               " independent",
                                       "all independent"};
                 }});
  out.push_back({12, "theta(C5) sandwich from umbrella representations", "pentagon umbrella", 1000,
                 [](const ReproduceOptions&) {
                   auto c5 = cycle_graph(5);
                   double up = theta_upper_from_orthorep(c5, pentagon_umbrella(1));
                   double lo = theta_lower_from_dual(c5, pentagon_umbrella(2));
                   const double r5 = std::sqrt(5.0);
                   char buf[96];
                   std::snprintf(buf, sizeof buf, "[%.9f, %.9f]", lo, up);
                   return ClaimOutcome{up <= r5 + 1e-6 && lo >= r5 - 1e-6, buf, "[>= sqrt5 - 1e-6, <= sqrt5 + 1e-6]"};
                 }});
  out.push_back({13, "alpha(C5 x C5) = 5, so alpha^(1/2) = sqrt(5) = theta(C5)", "pentagon square independence",
                 10000, [](const ReproduceOptions&) {
                   auto g = generate("strong(cycle:5,cycle:5)");
                   auto a = alpha(g, Budget());
                   bool ok = a.exact && a.lower == 5 && is_independent_set(g, a.witness) &&
                             std::abs(std::sqrt(static_cast<double>(a.lower)) - theta_cycle(5)) <= 1e-9;
                   return ClaimOutcome{ok, std::to_string(a.lower), "5"};
                 }});
  out.push_back({14, "randomized invariant suites (200 instances each)", "invariants", 120000,
                 [](const ReproduceOptions& o) {
                   std::mt19937_64 rng(o.seed + 14);
                   std::uniform_int_distribution<std::size_t> small(1, 7), tiny(1, 5), dim(1, 5);
                   std::uniform_real_distribution<double> dens(0.1, 0.9);
                   int failures = 0;
                   for (int t = 0; t < 200; ++t) {
                     auto g = random_graph(rng, small(rng), dens(rng));
                     auto h = random_graph(rng, small(rng), dens(rng));
                     if (!complement(complement(g)).same_adjacency(g)) ++failures;
                     auto s = strong_product(g, h);
                     auto l = lex_product(g, h);
                     std::size_t expect_strong = 0, expect_lex = 0;
                     for (Vertex u = 0; u < g.order(); ++u)
                       for (Vertex x = 0; x < h.order(); ++x) {
                         expect_strong += (g.degree(u) + 1) * (h.degree(x) + 1) - 1;
                         expect_lex += g.degree(u) * h.order() + h.degree(x);
                       }
                     if (s.order() != g.order() * h.order() || 2 * s.edge_count() != expect_strong) ++failures;
                     if (l.order() != g.order() * h.order() || 2 * l.edge_count() != expect_lex) ++failures;
                     auto gs = random_graph(rng, tiny(rng), 0.5), hs = random_graph(rng, tiny(rng), 0.5);
                     if (alpha(lex_product(gs, hs), Budget()).lower != alpha(gs, Budget()).lower * alpha(hs, Budget()).lower)
                       ++failures;
                     PrimeModulus mod(t % 2 ? 3 : 2);
                     auto a = random_matrix(rng, dim(rng), dim(rng), mod);
                     auto b = random_matrix(rng, dim(rng), dim(rng), mod);
                     if (rank(kronecker(a, b)) != rank(a) * rank(b)) ++failures;
                     auto rep = random_rankrrep(rng, gs, 1 + static_cast<std::size_t>(t % 2), mod);
                     auto d = rankr_to_drep(gs, rep);
                     if (!verify_drep(gs, d) || rank(d.matrix) > rank(rep.matrix)) ++failures;
                   }
                   return ClaimOutcome{failures == 0, std::to_string(failures) + " failures", "0 failures"};
                 }});
  return out;
}

}  // namespace detail

/// Runs every claim in id order.
inline std::vector<ClaimResult> reproduce(const ReproduceOptions& opts = {}) {
  std::vector<ClaimResult> results;
  for (const auto& c : detail::claims()) {
    ClaimResult r{c.id, c.title, c.anchor, false, false, {}, {}, 0, c.limit_ms};
    auto start = std::chrono::steady_clock::now();
    try {
      auto o = c.run(opts);
      r.pass = o.pass;
      r.value = o.value;
      r.expected = o.expected;
    } catch (const std::exception& e) {
      r.pass = false;
      r.value = std::string("error: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (r.runtime_ms > r.limit_ms) r.pass = false;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace capacity

#endif  // CAPACITY_REPRODUCE_HPP
