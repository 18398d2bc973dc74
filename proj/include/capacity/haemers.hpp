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

#ifndef CAPACITY_HAEMERS_HPP
#define CAPACITY_HAEMERS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "capacity/budget.hpp"
#include "capacity/combinat.hpp"
#include "capacity/ffmat.hpp"
#include "capacity/generators.hpp"
#include "capacity/graph.hpp"

namespace capacity {

/// A matrix fitting a graph, with its rank.
struct FitCertificate {
  std::string graph_hash;
  std::string graph;  ///< graph expression, when known
  FMatrix matrix;
  std::size_t claimed_rank = 0;
};

/// Unit diagonal and zero entries (both orientations) on every non-edge.
inline Verdict verify_fits(const Graph& g, const FMatrix& m) {
  const std::size_t n = g.order();
  if (m.rows() != n || m.cols() != n)
    throw dimension_mismatch("fit matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             ", graph has " + std::to_string(n) + " vertices");
  for (Vertex v = 0; v < n; ++v)
    if (m(v, v) != 1) return Verdict::fail("diagonal entry " + std::to_string(v) + " is not 1");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v) && m(u, v) != 0)
        return Verdict::fail("entry (" + std::to_string(u) + "," + std::to_string(v) + ") on a non-edge is nonzero");
  return Verdict::pass();
}

/// verify_fits plus the rank and graph-hash claims.
inline Verdict verify_certificate(const Graph& g, const FitCertificate& c) {
  if (!c.graph_hash.empty() && c.graph_hash != g.hash())
    return Verdict::fail("certificate graph hash " + c.graph_hash + " does not match " + g.hash());
  if (c.matrix.rows() != g.order() || c.matrix.cols() != g.order())
    return Verdict::fail("matrix dimension does not match the graph order");
  if (auto v = verify_fits(g, c.matrix); !v) return v;
  auto r = rank(c.matrix);
  if (r != c.claimed_rank)
    return Verdict::fail("claimed rank " + std::to_string(c.claimed_rank) + " but rank is " + std::to_string(r));
  return Verdict::pass();
}

inline FitCertificate make_certificate(const Graph& g, FMatrix m, std::string expr = {}) {
  auto r = rank(m);
  return FitCertificate{g.hash(), std::move(expr), std::move(m), r};
}

/// 0/1 matrix of a clique partition: m_uv = 1 iff u and v share a class.
inline FitCertificate cover_certificate(const Graph& g, const CliqueCover& cover, std::uint32_t p) {
  if (auto v = verify_clique_cover(g, cover); !v) throw invalid_certificate("clique cover: " + v.reason);
  PrimeModulus mod(p);
  if (g.order() == 0) throw precondition_error("graph has no vertices");
  FMatrix m(g.order(), g.order(), mod);
  for (const auto& cls : cover.classes)
    for (auto u : cls)
      for (auto v : cls) m(u, v) = 1;
  return make_certificate(g, std::move(m));
}

/// M^T M for the vertex/set incidence matrix M of the Johnson graph over GF(p):
/// entry (X, Y) is |X n Y| mod p.
inline FitCertificate johnson_certificate(std::uint32_t p, std::size_t n, const GraphLimits& limits = {}) {
  PrimeModulus mod(p);
  auto sets = k_subsets(n, p + 1, limits.max_vertices);
  if (sets.empty()) throw precondition_error("johnson graph has no vertices");
  FMatrix m(sets.size(), sets.size(), mod);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) m.set(a, b, std::popcount(sets[a] & sets[b]));
  auto g = johnson_graph(p, n, limits);
  auto r = rank(m);
  return FitCertificate{g.hash(), "johnson:" + std::to_string(p) + "," + std::to_string(n), std::move(m), r};
}

struct MinrankOptions {
  std::uint64_t max_assignments = std::uint64_t{1} << 30;  ///< cap on p^(2|E|)
};

struct MinrankResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  FitCertificate witness;  ///< rank equals upper
  std::uint64_t nodes = 0;
};

namespace detail {

class MinrankSearch {
 public:
  MinrankSearch(const Graph& g, PrimeModulus mod, const Budget& budget, std::size_t floor, std::size_t best,
                FMatrix incumbent)
      : g_(g), mod_(mod), budget_(budget), floor_(floor), best_(best), incumbent_(std::move(incumbent)),
        current_(incumbent_) {
    for (Vertex v = 0; v < g.order(); ++v) free_.push_back(g.neighbours(v).to_vector());
  }

  void run() { row(0, RowBasis(g_.order(), mod_)); }

  bool timed_out() const { return timed_out_; }
  std::size_t best() const { return best_; }
  const FMatrix& incumbent() const { return incumbent_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool done() const { return timed_out_ || best_ <= floor_; }

  void row(Vertex u, const RowBasis& basis) {
    if (done()) return;
    if (u == g_.order()) {
      best_ = basis.rank();
      incumbent_ = current_;
      return;
    }
    const auto& cols = free_[u];
    std::vector<std::uint32_t> digits(cols.size(), 0);
    for (;;) {
      if (budget_.expired()) {
        timed_out_ = true;
        return;
      }
      ++nodes_;
      std::vector<std::uint32_t> r(g_.order(), 0);
      r[u] = 1;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        r[cols[i]] = digits[i];
        current_(u, cols[i]) = digits[i];
      }
      RowBasis next = basis;
      next.insert(std::move(r));
      if (next.rank() < best_) row(u + 1, next);
      if (done()) return;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == mod_.value()) digits[i++] = 0;
      if (i == digits.size()) return;
    }
  }

  const Graph& g_;
  PrimeModulus mod_;
  const Budget& budget_;
  std::size_t floor_;
  std::size_t best_;
  FMatrix incumbent_;
  FMatrix current_;
  std::vector<std::vector<Vertex>> free_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace detail

/// Minimum rank of a matrix fitting g over GF(p). Every ordered edge entry is
/// free (asymmetric fits allowed). Rows are assigned in vertex order and a
/// branch is cut as soon as the rows so far reach the incumbent rank. The
/// search starts from a clique cover certificate and stops early at alpha(g).
/// When p^(2|E|) exceeds the cap or the budget runs out, the result is the
/// interval [alpha(g), best certificate rank].
inline MinrankResult minrank_exact(const Graph& g, std::uint32_t p, const MinrankOptions& opts = {},
                                   const Budget& budget = Budget::from_env()) {
  PrimeModulus mod(p);
  if (g.order() == 0) throw precondition_error("graph has no vertices");
  auto a = alpha(g, budget);
  auto greedy = greedy_clique_cover(g);
  auto found = clique_cover_leq(g, greedy.size(), budget);
  CliqueCover cover = found.status == SearchStatus::found ? found.cover : greedy;
  while (cover.size() > a.lower) {
    auto smaller = clique_cover_leq(g, cover.size() - 1, budget);
    if (smaller.status != SearchStatus::found) break;
    cover = smaller.cover;
  }
  MinrankResult out{a.lower, 0, false, cover_certificate(g, cover, p), 0};
  out.upper = out.witness.claimed_rank;

  long double space = 1;
  for (std::size_t i = 0; i < 2 * g.edge_count(); ++i) space *= p;
  const bool feasible = space <= static_cast<long double>(opts.max_assignments);
  if (feasible && a.exact && out.upper > out.lower) {
    detail::MinrankSearch s(g, mod, budget, out.lower, out.upper, out.witness.matrix);
    s.run();
    out.nodes = s.nodes();
    if (s.best() < out.upper) {
      out.witness = make_certificate(g, s.incumbent());
      out.upper = out.witness.claimed_rank;
    }
    out.exact = !s.timed_out();
  } else {
    out.exact = a.exact && out.upper == out.lower;
  }
  if (out.exact) out.lower = out.upper;
  return out;
}

/// Multilinear polynomial over GF(m): monomial (subset of variables) -> coefficient.
struct MultilinearPoly {
  std::map<Subset, std::uint32_t> terms;

  std::uint32_t evaluate(Subset point, const PrimeModulus& mod) const {
    std::uint32_t s = 0;
    for (const auto& [mono, c] : terms)
      if ((mono & ~point) == 0) s = mod.add(s, c);
    return s;
  }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [mono, c] : terms) d = std::max<std::size_t>(d, std::popcount(mono));
    return d;
  }
};

/// Polynomial representation: vertex v carries (P_v, x_v) with x_v a 0/1 point.
struct PolyRep {
  std::uint32_t modulus = 2;
  std::vector<MultilinearPoly> polys;
  std::vector<Subset> points;
};

/// P_v(x_v) != 0 and P_u(x_v) = P_v(x_u) = 0 on non-edges.
inline Verdict verify_polyrep(const Graph& g, const PolyRep& rep) {
  PrimeModulus mod(rep.modulus);
  if (rep.polys.size() != g.order() || rep.points.size() != g.order())
    throw dimension_mismatch("polynomial representation size does not match the graph order");
  for (Vertex v = 0; v < g.order(); ++v)
    if (rep.polys[v].evaluate(rep.points[v], mod) == 0)
      return Verdict::fail("P_" + std::to_string(v) + " vanishes at its own point");
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (u != v && !g.adjacent(u, v) && rep.polys[u].evaluate(rep.points[v], mod) != 0)
        return Verdict::fail("P_" + std::to_string(u) + " does not vanish at the point of non-neighbour " +
                             std::to_string(v));
  return Verdict::pass();
}

/// Product of (<1_X, x> - c) over the given constants, reduced with x^2 = x.
inline MultilinearPoly linear_product(Subset x, const std::vector<std::int64_t>& constants, const PrimeModulus& mod) {
  MultilinearPoly poly;
  poly.terms[0] = 1;
  for (auto c : constants) {
    std::map<Subset, std::uint32_t> next;
    const auto neg_c = mod.neg(mod.reduce(c));
    for (const auto& [mono, coeff] : poly.terms) {
      if (neg_c) next[mono] = mod.add(next[mono], mod.mul(coeff, neg_c));
      for (std::size_t j = 0; j < 64; ++j)
        if ((x >> j) & 1u) {
          auto target = mono | (Subset{1} << j);
          next[target] = mod.add(next[target], coeff);
        }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    poly.terms = std::move(next);
  }
  return poly;
}

/// Direct evaluation of the unreduced product at a 0/1 point.
inline std::uint32_t linear_product_at(Subset x, Subset point, const std::vector<std::int64_t>& constants,
                                       const PrimeModulus& mod) {
  std::uint32_t v = 1;
  const auto meet = static_cast<std::int64_t>(std::popcount(x & point));
  for (auto c : constants) v = mod.mul(v, mod.reduce(meet - c));
  return v;
}

enum class AlonVariant { P, Q, R };

struct AlonCertificate {
  FitCertificate fit;
  PolyRep poly;
  std::size_t degree = 0;
  BigInt rank_bound;  ///< number of multilinear monomials of degree <= degree
  std::string target;  ///< graph expression the certificate fits
};

/// Polynomial constructions on the (pq-1)-subsets of [n]:
///   P: modulus p, constants 0..p-2, fits alon:p,q,n;
///   Q: modulus q != p, constants 0..q-2, fits complement(alon:p,q,n);
///   R: q = p, modulus > p, constants ip-1 for i = 1..p-1, fits complement(alon:p,p,n).
/// The multilinear reduction is checked against the unreduced product at every
/// indicator point.
inline AlonCertificate alon_certificate(AlonVariant variant, std::uint32_t p, std::uint32_t q, std::size_t n,
                                        std::uint32_t modulus, const GraphLimits& limits = {}) {
  if (!is_prime(p) || !is_prime(q)) throw precondition_error("p and q must be prime");
  if (!is_prime(modulus)) throw precondition_error("modulus must be prime");
  std::vector<std::int64_t> constants;
  std::string base = "alon:" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(n);
  std::string target_expr;
  switch (variant) {
    case AlonVariant::P:
      if (modulus != p) throw precondition_error("variant P works over GF(p)");
      for (std::int64_t i = 0; i + 2 <= static_cast<std::int64_t>(p); ++i) constants.push_back(i);
      target_expr = base;
      break;
    case AlonVariant::Q:
      if (q == p) throw precondition_error("variant Q needs q != p");
      if (modulus != q) throw precondition_error("variant Q works over GF(q)");
      for (std::int64_t i = 0; i + 2 <= static_cast<std::int64_t>(q); ++i) constants.push_back(i);
      target_expr = "complement(" + base + ")";
      break;
    case AlonVariant::R:
      if (q != p) throw precondition_error("variant R needs q = p");
      if (modulus <= p) throw precondition_error("variant R needs a modulus larger than p");
      for (std::int64_t i = 1; i + 1 <= static_cast<std::int64_t>(p); ++i)
        constants.push_back(i * static_cast<std::int64_t>(p) - 1);
      target_expr = "complement(" + base + ")";
      break;
  }
  PrimeModulus mod(modulus);
  auto sets = k_subsets(n, static_cast<std::size_t>(p) * q - 1, limits.max_vertices);
  if (sets.empty()) throw precondition_error("alon graph has no vertices");
  PolyRep poly_rep;
  poly_rep.modulus = modulus;
  FMatrix m(sets.size(), sets.size(), mod);
  for (std::size_t a = 0; a < sets.size(); ++a) {
    auto poly = linear_product(sets[a], constants, mod);
    std::vector<std::uint32_t> row(sets.size());
    for (std::size_t b = 0; b < sets.size(); ++b) {
      row[b] = poly.evaluate(sets[b], mod);
      if (row[b] != linear_product_at(sets[a], sets[b], constants, mod))
        throw error("multilinear reduction disagrees with the product at an indicator point; this is a bug");
    }
    if (row[a] == 0) throw precondition_error("polynomial vanishes at its own point over GF(" + std::to_string(modulus) + ")");
    auto scale = mod.inv(row[a]);
    for (std::size_t b = 0; b < sets.size(); ++b) m(a, b) = mod.mul(scale, row[b]);
    poly_rep.polys.push_back(std::move(poly));
    poly_rep.points.push_back(sets[a]);
  }
  auto alon = alon_graph(p, q, n, limits);
  auto target = variant == AlonVariant::P ? alon : complement(alon);
  auto r = rank(m);
  BigInt bound = 0;
  for (std::size_t i = 0; i <= constants.size(); ++i) bound += binomial(static_cast<long long>(n), i);
  return AlonCertificate{FitCertificate{target.hash(), target_expr, std::move(m), r}, std::move(poly_rep),
                         constants.size(), bound, target_expr};
}

}  // namespace capacity

#endif  // CAPACITY_HAEMERS_HPP
