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

#ifndef CAPACITY_HFRAC_HPP
#define CAPACITY_HFRAC_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "capacity/budget.hpp"
#include "capacity/combinat.hpp"
#include "capacity/ffmat.hpp"
#include "capacity/fracchrom.hpp"
#include "capacity/graph.hpp"
#include "capacity/graph_expr.hpp"
#include "capacity/haemers.hpp"
#include "capacity/rational.hpp"
#include "capacity/report.hpp"

namespace capacity {

/// Block matrix with I_d diagonal blocks and O_d blocks on non-edges. Block
/// (u, v) occupies rows u*d.. and columns v*d...
struct DRep {
  std::size_t d = 1;
  FMatrix matrix;
};

/// Per-vertex pairs (A_v, B_v) of n x d matrices with A_v^T B_v = I_d and
/// A_u^T B_v = O_d on non-edges.
struct PairRep {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<FMatrix> a;
  std::vector<FMatrix> b;
};

/// Variable block sizes; diagonal blocks of rank at least r, zero blocks on non-edges.
struct RankRRep {
  std::size_t r = 1;
  std::vector<std::size_t> sizes;
  FMatrix matrix;
};

/// d-dimensional subspaces S_v of GF(p)^n, each given by an n x d basis.
struct SubspaceRep {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<FMatrix> bases;
};

inline Rational ratio_of(const DRep& rep) {
  return Rational(static_cast<long long>(rank(rep.matrix)), static_cast<long long>(rep.d));
}

inline std::string block_name(Vertex u, Vertex v) {
  return "block (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

namespace detail {

inline bool block_is_identity(const FMatrix& m, std::size_t r0, std::size_t c0, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (m(r0 + i, c0 + j) != (i == j ? 1u : 0u)) return false;
  return true;
}

inline bool block_is_zero(const FMatrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (m(r0 + i, c0 + j) != 0) return false;
  return true;
}

}  // namespace detail

inline Verdict verify_drep(const Graph& g, const DRep& rep) {
  const std::size_t n = g.order(), d = rep.d;
  if (d == 0) throw dimension_mismatch("d must be positive");
  if (rep.matrix.rows() != n * d || rep.matrix.cols() != n * d)
    throw dimension_mismatch("d-representation matrix must be " + std::to_string(n * d) + " square");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) {
        if (!detail::block_is_identity(rep.matrix, u * d, v * d, d))
          return Verdict::fail(block_name(u, v) + " is not the identity");
      } else if (!g.adjacent(u, v) && !detail::block_is_zero(rep.matrix, u * d, v * d, d, d)) {
        return Verdict::fail(block_name(u, v) + " on a non-edge is nonzero");
      }
    }
  return Verdict::pass();
}

inline Verdict verify_pairrep(const Graph& g, const PairRep& rep) {
  const std::size_t n = g.order();
  if (rep.a.size() != n || rep.b.size() != n) throw dimension_mismatch("pair representation needs one pair per vertex");
  if (rep.d == 0 || rep.n == 0) throw dimension_mismatch("pair representation dimensions must be positive");
  for (Vertex v = 0; v < n; ++v)
    for (const auto* m : {&rep.a[v], &rep.b[v]})
      if (m->rows() != rep.n || m->cols() != rep.d)
        throw dimension_mismatch("matrix of vertex " + std::to_string(v) + " is not " + std::to_string(rep.n) + "x" +
                                 std::to_string(rep.d));
  std::vector<FMatrix> at;
  for (const auto& a : rep.a) at.push_back(a.transpose());
  const auto id = FMatrix::identity(rep.d, rep.a[0].modulus());
  for (Vertex v = 0; v < n; ++v)
    if (matmul(at[v], rep.b[v]) != id) return Verdict::fail("A_" + std::to_string(v) + "^T B_" + std::to_string(v) + " is not the identity");
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v) && !matmul(at[u], rep.b[v]).is_zero())
        return Verdict::fail("A_" + std::to_string(u) + "^T B_" + std::to_string(v) + " on a non-edge is nonzero");
  return Verdict::pass();
}

inline std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> off(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) off[i + 1] = off[i] + sizes[i];
  return off;
}

inline Verdict verify_rankrrep(const Graph& g, const RankRRep& rep) {
  const std::size_t n = g.order();
  if (rep.sizes.size() != n) throw dimension_mismatch("rank-r representation needs one block size per vertex");
  auto off = block_offsets(rep.sizes);
  if (rep.matrix.rows() != off[n] || rep.matrix.cols() != off[n])
    throw dimension_mismatch("rank-r representation matrix must be " + std::to_string(off[n]) + " square");
  for (Vertex v = 0; v < n; ++v) {
    if (rep.sizes[v] < rep.r) return Verdict::fail(block_name(v, v) + " is smaller than r");
    auto blk = rep.matrix.block(off[v], off[v], rep.sizes[v], rep.sizes[v]);
    if (rank(blk) < rep.r) return Verdict::fail(block_name(v, v) + " has rank below r");
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v) &&
          !detail::block_is_zero(rep.matrix, off[u], off[v], rep.sizes[u], rep.sizes[v]))
        return Verdict::fail(block_name(u, v) + " on a non-edge is nonzero");
  return Verdict::pass();
}

/// dim S_v = d and S_v meets the sum of the non-neighbours' subspaces trivially.
inline Verdict verify_subspacerep(const Graph& g, const SubspaceRep& rep) {
  const std::size_t n = g.order();
  if (rep.bases.size() != n) throw dimension_mismatch("subspace representation needs one basis per vertex");
  for (Vertex v = 0; v < n; ++v)
    if (rep.bases[v].rows() != rep.n || rep.bases[v].cols() != rep.d)
      throw dimension_mismatch("basis of vertex " + std::to_string(v) + " has the wrong shape");
  const auto mod = rep.bases.empty() ? PrimeModulus(2) : rep.bases[0].modulus();
  for (Vertex v = 0; v < n; ++v) {
    if (rank(rep.bases[v]) != rep.d) return Verdict::fail("S_" + std::to_string(v) + " does not have dimension d");
    std::vector<FMatrix> others;
    for (Vertex u = 0; u < n; ++u)
      if (u != v && !g.adjacent(u, v)) others.push_back(rep.bases[u]);
    if (others.empty()) continue;
    auto rest = span_dimension(others, rep.n, mod);
    others.push_back(rep.bases[v]);
    if (span_dimension(others, rep.n, mod) != rest + rep.d)
      return Verdict::fail("S_" + std::to_string(v) + " meets the span of its non-neighbours");
  }
  return Verdict::pass();
}

/// Factor M = A^T B with r = rank(M) rows: B is the nonzero part of the
/// reduced echelon form and A^T the pivot columns of M.
inline PairRep pairrep_from_drep(const DRep& rep) {
  const auto& m = rep.matrix;
  const std::size_t d = rep.d;
  if (d == 0 || m.rows() % d != 0) throw invalid_certificate("matrix order is not a multiple of d");
  const std::size_t nv = m.rows() / d;
  auto e = echelon(m);
  const std::size_t r = e.pivot_cols.size();
  std::vector<std::size_t> top(r), all(m.rows());
  for (std::size_t i = 0; i < r; ++i) top[i] = i;
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto bmat = e.reduced.submatrix(top, all);        // r x N
  auto amat = m.submatrix(all, e.pivot_cols).transpose();  // r x N
  PairRep out{r, d, {}, {}};
  for (Vertex v = 0; v < nv; ++v) {
    out.a.push_back(amat.block(0, v * d, r, d));
    out.b.push_back(bmat.block(0, v * d, r, d));
  }
  return out;
}

inline DRep drep_from_pairrep(const PairRep& rep) {
  const std::size_t nv = rep.a.size(), d = rep.d;
  if (nv == 0 || rep.b.size() != nv) throw invalid_certificate("pair representation is empty or unbalanced");
  FMatrix m(nv * d, nv * d, rep.a[0].modulus());
  for (Vertex u = 0; u < nv; ++u) {
    auto at = rep.a[u].transpose();
    for (Vertex v = 0; v < nv; ++v) {
      auto blk = matmul(at, rep.b[v]);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(u * d + i, v * d + j) = blk(i, j);
    }
  }
  return DRep{d, std::move(m)};
}

/// S_v = column space of A_v.
inline SubspaceRep subspace_from_pairrep(const PairRep& rep) { return SubspaceRep{rep.n, rep.d, rep.a}; }

/// Keeps an r x r full-rank submatrix of every diagonal block (rows R_v,
/// columns C_v), restricts every block to those rows and columns, and
/// multiplies block row v by the inverse of its chosen submatrix.
inline DRep rankr_to_drep(const Graph& g, const RankRRep& rep) {
  if (auto v = verify_rankrrep(g, rep); !v) throw invalid_certificate(v.reason);
  const std::size_t n = g.order(), r = rep.r;
  if (n == 0) throw precondition_error("graph has no vertices");
  auto off = block_offsets(rep.sizes);
  std::vector<std::size_t> rows, cols;
  std::vector<FMatrix> inv;
  for (Vertex v = 0; v < n; ++v) {
    auto blk = rep.matrix.block(off[v], off[v], rep.sizes[v], rep.sizes[v]);
    auto pick = select_full_rank_submatrix(blk, r);
    for (auto i : pick.rows) rows.push_back(off[v] + i);
    for (auto j : pick.cols) cols.push_back(off[v] + j);
    inv.push_back(inverse(blk.submatrix(pick.rows, pick.cols)));
  }
  auto sub = rep.matrix.submatrix(rows, cols);
  FMatrix out(n * r, n * r, rep.matrix.modulus());
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::size_t> brows(r), all(n * r);
    for (std::size_t i = 0; i < r; ++i) brows[i] = v * r + i;
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    auto band = matmul(inv[v], sub.submatrix(brows, all));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n * r; ++j) out(v * r + i, j) = band(i, j);
  }
  return DRep{r, std::move(out)};
}

/// Kronecker product of the two matrices with rows and columns permuted from
/// (u, i, x, j) to ((u, x), (i, j)) order, matching strong_product indexing.
inline DRep tensor_dreps(const DRep& g, const DRep& h) {
  require_same_field(g.matrix, h.matrix);
  const std::size_t ng = g.matrix.rows() / g.d, nh = h.matrix.rows() / h.d;
  auto k = kronecker(g.matrix, h.matrix);
  const std::size_t d = g.d * h.d;
  std::vector<std::size_t> perm(k.rows());
  for (std::size_t u = 0; u < ng; ++u)
    for (std::size_t x = 0; x < nh; ++x)
      for (std::size_t i = 0; i < g.d; ++i)
        for (std::size_t j = 0; j < h.d; ++j)
          perm[(u * nh + x) * d + i * h.d + j] = (u * g.d + i) * (nh * h.d) + x * h.d + j;
  return DRep{d, k.submatrix(perm, perm)};
}

/// Clique-partition d-representation from a fractional cover with common
/// denominator d: class c becomes weight(c)*d integral copies, vertex v takes
/// its first d copies in class order as its d slots, and entry
/// ((v,i),(u,j)) is 1 when slots (v,i) and (u,j) hold the same copy.
inline DRep drep_from_fractional_cover(const Graph& g, const FractionalCover& cover, std::uint32_t p) {
  if (auto v = verify_cover(g, cover); !v) throw invalid_certificate("fractional cover: " + v.reason);
  const std::size_t n = g.order();
  if (n == 0) throw precondition_error("graph has no vertices");
  if (cover.d > BigInt(1 << 20)) throw guard_exceeded("cover denominator is too large");
  const auto d = static_cast<std::size_t>(cover.d);
  std::vector<std::vector<std::size_t>> slots(n);  // integral copy ids per vertex
  std::size_t copies = 0;
  for (const auto& wc : cover.classes) {
    auto mult = static_cast<std::size_t>(numerator(wc.weight * Rational(cover.d)));
    for (std::size_t t = 0; t < mult; ++t, ++copies)
      for (auto v : wc.clique)
        if (slots[v].size() < d) slots[v].push_back(copies);
  }
  FMatrix m(n * d, n * d, PrimeModulus(p));
  std::map<std::size_t, std::vector<std::size_t>> holders;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i) holders[slots[v][i]].push_back(v * d + i);
  for (const auto& [copy, rows] : holders)
    for (auto a : rows)
      for (auto b : rows) m(a, b) = 1;
  return DRep{d, std::move(m)};
}

/// d-representation of cycle:(2k+1) from its optimal fractional cover:
/// ratio (2k+1)/2 for k >= 2; for k = 1 the cycle is a triangle and the ratio is 1.
inline DRep cycle_drep(std::size_t k, std::uint32_t p) {
  if (k < 1) throw precondition_error("cycle_drep needs k >= 1");
  auto g = cycle_graph(2 * k + 1);
  auto cover = fractional_clique_cover(g, Budget());
  return drep_from_fractional_cover(g, cover.cover, p);
}

/// Whether sum_{v in S} X_v and sum_{v in T} X_v are independent, X_v = col(A_v).
/// S and T must be disjoint, S independent, and no edges between S and T.
inline bool linind_check(const PairRep& rep, const Graph& g, const std::vector<Vertex>& s,
                         const std::vector<Vertex>& t) {
  for (auto v : s) g.check_vertex(v);
  for (auto v : t) g.check_vertex(v);
  for (auto u : s)
    for (auto v : t)
      if (u == v) throw precondition_error("S and T must be disjoint");
  if (!is_independent_set(g, s)) throw precondition_error("S is not an independent set");
  for (auto u : s)
    for (auto v : t)
      if (g.adjacent(u, v)) throw precondition_error("S and T are joined by an edge");
  if (rep.a.size() != g.order()) throw dimension_mismatch("pair representation does not match the graph order");
  const auto mod = rep.a[0].modulus();
  std::vector<FMatrix> xs, xt;
  for (auto v : s) xs.push_back(rep.a[v]);
  for (auto v : t) xt.push_back(rep.a[v]);
  auto ds = xs.empty() ? 0 : span_dimension(xs, rep.n, mod);
  auto dt = xt.empty() ? 0 : span_dimension(xt, rep.n, mod);
  xs.insert(xs.end(), xt.begin(), xt.end());
  auto both = xs.empty() ? 0 : span_dimension(xs, rep.n, mod);
  return both == ds + dt;
}

template <class Rng>
FMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, PrimeModulus mod) {
  std::uniform_int_distribution<std::uint32_t> dist(0, mod.value() - 1);
  FMatrix m(rows, cols, mod);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

template <class Rng>
FMatrix random_invertible(Rng& rng, std::size_t n, PrimeModulus mod) {
  for (;;) {
    auto m = random_matrix(rng, n, n, mod);
    if (rank(m) == n) return m;
  }
}

/// Another pair representation of the same graph: `extra` random coordinates
/// are appended to every A_v (with zeros in B_v), each pair is twisted by a
/// random invertible T_v (A_v T_v, B_v T_v^-T), and the ambient space by a
/// random invertible G (G A_v, G^-T B_v).
template <class Rng>
PairRep randomize_pairrep(const PairRep& rep, Rng& rng, std::size_t extra = 0) {
  if (rep.a.empty()) return rep;
  const auto mod = rep.a[0].modulus();
  const std::size_t n = rep.n + extra, d = rep.d;
  auto g = random_invertible(rng, n, mod);
  auto g_inv_t = inverse(g).transpose();
  PairRep out{n, d, {}, {}};
  for (std::size_t v = 0; v < rep.a.size(); ++v) {
    FMatrix a(n, d, mod), b(n, d, mod);
    auto pad = random_matrix(rng, n, d, mod);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        a(i, j) = i < rep.n ? rep.a[v](i, j) : pad(i, j);
        b(i, j) = i < rep.n ? rep.b[v](i, j) : 0;
      }
    auto t = random_invertible(rng, d, mod);
    out.a.push_back(matmul(g, matmul(a, t)));
    out.b.push_back(matmul(g_inv_t, matmul(b, inverse(t).transpose())));
  }
  return out;
}

struct HfracSearchOptions {
  std::size_t dmax = 2;  ///< largest d for directly constructed representations
  MinrankOptions minrank;
};

struct HfracSearchResult {
  BoundReport report;
  DRep certificate;  ///< attains report.upper
};

/// Interval on H_f(g; GF(p)): lower end alpha(g), upper end the best ratio
/// among the d = 1 minrank certificate and the fractional-cover
/// representation when its d is at most dmax.
inline HfracSearchResult hfrac_upper_search(const Graph& g, std::uint32_t p, const HfracSearchOptions& opts = {},
                                            const Budget& budget = Budget::from_env()) {
  if (opts.dmax < 1) throw precondition_error("dmax must be at least 1");
  if (g.order() == 0) throw precondition_error("graph has no vertices");
  auto a = alpha(g, budget);
  auto mr = minrank_exact(g, p, opts.minrank, budget);
  DRep best{1, mr.witness.matrix};
  Rational best_ratio(static_cast<long long>(mr.upper));
  std::vector<std::string> refs{"minrank d=1 rank " + std::to_string(mr.upper)};
  if (opts.dmax >= 2) {
    auto fc = fractional_clique_cover(g, budget);
    if (fc.cover.d <= BigInt(opts.dmax)) {
      auto rep = drep_from_fractional_cover(g, fc.cover, p);
      auto r = ratio_of(rep);
      if (r < best_ratio) {
        best_ratio = r;
        best = std::move(rep);
        refs.push_back("fractional cover d=" + std::to_string(best.d) + " ratio " + to_string(r));
      }
    }
  }
  BoundReport report{"hfrac", "", BoundValue::rational(Rational(static_cast<long long>(a.lower))),
                     BoundValue::rational(best_ratio), std::move(refs), std::nullopt, std::nullopt, false};
  return HfracSearchResult{std::move(report), std::move(best)};
}

/// As above on a graph expression; strong products additionally combine the
/// factors' certificates by tensoring.
inline HfracSearchResult hfrac_upper_search(const GraphExpr& e, std::uint32_t p, const HfracSearchOptions& opts = {},
                                            const Budget& budget = Budget::from_env(), const GenerateOptions& gen = {}) {
  auto g = generate(e, gen);
  auto direct = hfrac_upper_search(g, p, opts, budget);
  direct.report.graph = to_string(e);
  if (e.kind == GraphExpr::Kind::strong) {
    auto left = hfrac_upper_search(e.children[0], p, opts, budget, gen);
    auto right = hfrac_upper_search(e.children[1], p, opts, budget, gen);
    auto rep = tensor_dreps(left.certificate, right.certificate);
    auto r = ratio_of(rep);
    if (r < *direct.report.upper.exact) {
      direct.report.upper = BoundValue::rational(r);
      direct.report.witness_refs.push_back("tensor of factor certificates d=" + std::to_string(rep.d) + " ratio " +
                                           to_string(r));
      direct.certificate = std::move(rep);
    }
  }
  return direct;
}

}  // namespace capacity

#endif  // CAPACITY_HFRAC_HPP
