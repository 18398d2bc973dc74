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

#ifndef CAPACITY_COMBINAT_HPP
#define CAPACITY_COMBINAT_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "capacity/budget.hpp"
#include "capacity/graph.hpp"
#include "capacity/rational.hpp"

namespace capacity {

/// Partition of the vertex set into cliques.
struct CliqueCover {
  std::vector<std::vector<Vertex>> classes;

  std::size_t size() const { return classes.size(); }
};

inline Verdict verify_clique_cover(const Graph& g, const CliqueCover& cover) {
  std::vector<int> seen(g.order(), 0);
  for (std::size_t c = 0; c < cover.classes.size(); ++c) {
    const auto& cls = cover.classes[c];
    if (cls.empty()) return Verdict::fail("class " + std::to_string(c) + " is empty");
    for (auto v : cls) {
      if (v >= g.order()) return Verdict::fail("class " + std::to_string(c) + " has out-of-range vertex");
      if (seen[v]++) return Verdict::fail("vertex " + std::to_string(v) + " appears in two classes");
    }
    if (!is_clique(g, cls)) return Verdict::fail("class " + std::to_string(c) + " is not a clique");
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!seen[v]) return Verdict::fail("vertex " + std::to_string(v) + " is not covered");
  return Verdict::pass();
}

/// alpha(g) with a witness. When the budget runs out, `exact` is false and
/// [lower, upper] still brackets the true value.
struct AlphaResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  std::vector<Vertex> witness;  ///< sorted, size == lower
};

namespace detail {

// Bitset max-clique search with a greedy colouring bound at each node. The
// caller passes the graph in which cliques are sought.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& h, const Budget& budget) : budget_(budget) {
    const std::size_t n = h.order();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    std::vector<Vertex> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = i;
    adj_.assign(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
      for (auto w : h.neighbours(order_[i]).to_vector()) adj_[i].set(pos[w]);
  }

  void run(std::size_t initial_best = 0) {
    const std::size_t n = adj_.size();
    best_.clear();
    best_size_ = initial_best;
    VertexSet all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    std::vector<Vertex> c;
    root_bound_ = n == 0 ? 0 : colour_count(all);
    if (n > 0) expand(c, all);
  }

  bool timed_out() const { return timed_out_; }
  std::size_t root_bound() const { return root_bound_; }

  std::vector<Vertex> best() const {
    std::vector<Vertex> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t colour_count(VertexSet p) const {
    std::size_t colours = 0;
    while (!p.empty()) {
      ++colours;
      VertexSet q = p;
      while (!q.empty()) {
        auto v = q.first();
        q.reset(v);
        q.subtract(adj_[v]);
        p.reset(v);
      }
    }
    return colours;
  }

  void colour(VertexSet p, std::vector<Vertex>& verts, std::vector<std::size_t>& bounds) const {
    std::size_t colours = 0;
    while (!p.empty()) {
      ++colours;
      VertexSet q = p;
      while (!q.empty()) {
        auto v = q.first();
        q.reset(v);
        q.subtract(adj_[v]);
        p.reset(v);
        verts.push_back(v);
        bounds.push_back(colours);
      }
    }
  }

  void expand(std::vector<Vertex>& c, VertexSet p) {
    if (budget_.expired()) {
      timed_out_ = true;
      return;
    }
    std::vector<Vertex> verts;
    std::vector<std::size_t> bounds;
    colour(p, verts, bounds);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (c.size() + bounds[i] <= best_size_ || timed_out_) return;
      auto v = verts[i];
      c.push_back(v);
      VertexSet np = p & adj_[v];
      if (np.empty()) {
        if (c.size() > best_size_) {
          best_size_ = c.size();
          best_ = c;
        }
      } else {
        expand(c, np);
      }
      c.pop_back();
      p.reset(v);
    }
  }

  const Budget& budget_;
  std::vector<Vertex> order_;
  std::vector<VertexSet> adj_;
  std::vector<Vertex> best_;
  std::size_t best_size_ = 0;
  std::size_t root_bound_ = 0;
  bool timed_out_ = false;
};

}  // namespace detail

/// Exact independence number by branch and bound (maximum clique of the
/// complement, vertices in descending complement degree).
inline AlphaResult alpha(const Graph& g, const Budget& budget = Budget::from_env()) {
  AlphaResult r;
  if (g.order() == 0) {
    r.exact = true;
    return r;
  }
  auto h = complement(g);
  detail::CliqueSearch search(h, budget);
  search.run();
  r.witness = search.best();
  if (r.witness.empty()) r.witness = {0};
  r.lower = r.witness.size();
  r.exact = !search.timed_out();
  r.upper = r.exact ? r.lower : std::max(r.lower, search.root_bound());
  return r;
}

/// Maximum clique of g (used for the clique side of bounds and for pricing).
inline AlphaResult clique_number(const Graph& g, const Budget& budget = Budget::from_env()) {
  return alpha(complement(g), budget);
}

enum class SearchStatus { found, none, timeout };

struct CoverSearch {
  SearchStatus status = SearchStatus::none;
  CliqueCover cover;
};

/// Partition of V(g) into at most k cliques, by DSATUR backtracking colouring
/// of the complement. Exhaustive unless the budget expires.
inline CoverSearch clique_cover_leq(const Graph& g, std::size_t k, const Budget& budget = Budget::from_env()) {
  if (k == 0) throw precondition_error("clique_cover_leq needs k >= 1");
  const std::size_t n = g.order();
  CoverSearch out;
  if (n == 0) {
    out.status = SearchStatus::found;
    return out;
  }
  auto h = complement(g);
  std::vector<int> colour(n, -1);
  // forbidden[v][c] counts coloured H-neighbours of v with colour c.
  std::vector<std::vector<int>> forbidden(n, std::vector<int>(k, 0));
  std::vector<std::size_t> saturation(n, 0);
  bool timed_out = false;

  auto assign = [&](Vertex v, int c, int delta) {
    for (auto w : h.neighbours(v).to_vector()) {
      auto& f = forbidden[w][static_cast<std::size_t>(c)];
      if (delta > 0 && f++ == 0) ++saturation[w];
      if (delta < 0 && --f == 0) --saturation[w];
    }
  };

  auto solve = [&](auto&& self, std::size_t coloured, int used) -> bool {
    if (coloured == n) return true;
    if (budget.expired()) {
      timed_out = true;
      return false;
    }
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && h.degree(v) > h.degree(pick)))
        pick = v;
    }
    int limit = std::min<int>(used + 1, static_cast<int>(k));
    for (int c = 0; c < limit; ++c) {
      if (forbidden[pick][static_cast<std::size_t>(c)] != 0) continue;
      colour[pick] = c;
      assign(pick, c, +1);
      if (self(self, coloured + 1, std::max(used, c + 1))) return true;
      assign(pick, c, -1);
      colour[pick] = -1;
      if (timed_out) return false;
    }
    return false;
  };

  if (solve(solve, 0, 0)) {
    int classes = *std::max_element(colour.begin(), colour.end()) + 1;
    out.cover.classes.assign(static_cast<std::size_t>(classes), {});
    for (Vertex v = 0; v < n; ++v) out.cover.classes[static_cast<std::size_t>(colour[v])].push_back(v);
    out.status = SearchStatus::found;
  } else {
    out.status = timed_out ? SearchStatus::timeout : SearchStatus::none;
  }
  return out;
}

/// Greedy clique cover (first-fit colouring of the complement); always succeeds.
inline CliqueCover greedy_clique_cover(const Graph& g) {
  CliqueCover cover;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool placed = false;
    for (auto& cls : cover.classes) {
      bool ok = std::all_of(cls.begin(), cls.end(), [&](Vertex u) { return g.adjacent(u, v); });
      if (ok) {
        cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) cover.classes.push_back({v});
  }
  return cover;
}

struct WeightedSet {
  std::vector<Vertex> vertices;  ///< sorted
  Rational weight;
  bool exact = true;
};

namespace detail {

// Max-weight clique in h by branch and bound; weights are non-negative
// integers of type W. Bound: sum over greedy colour classes of the largest
// weight in each class.
template <class W>
class WeightedCliqueSearch {
 public:
  WeightedCliqueSearch(const Graph& h, std::vector<W> w, const Budget& budget)
      : h_(h), w_(std::move(w)), budget_(budget) {}

  void run() {
    const std::size_t n = h_.order();
    VertexSet all(n);
    for (std::size_t i = 0; i < n; ++i)
      if (w_[i] > 0) all.set(i);
    std::vector<Vertex> c;
    expand(c, W(0), all);
  }

  std::vector<Vertex> best() const {
    auto b = best_;
    std::sort(b.begin(), b.end());
    return b;
  }
  W best_weight() const { return best_w_; }
  bool timed_out() const { return timed_out_; }

 private:
  void expand(std::vector<Vertex>& c, W cw, VertexSet p) {
    if (budget_.expired()) {
      timed_out_ = true;
      return;
    }
    if (cw > best_w_) {
      best_w_ = cw;
      best_ = c;
    }
    std::vector<Vertex> verts;
    std::vector<W> bound;
    {
      VertexSet rest = p;
      W total(0);
      while (!rest.empty()) {
        VertexSet q = rest;
        W cls_max(0);
        while (!q.empty()) {
          auto v = q.first();
          q.reset(v);
          q.subtract(h_.neighbours(v));
          rest.reset(v);
          if (w_[v] > cls_max) cls_max = w_[v];
          verts.push_back(v);
          bound.push_back(total + cls_max);
        }
        total += cls_max;
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (timed_out_ || cw + bound[i] <= best_w_) return;
      auto v = verts[i];
      c.push_back(v);
      expand(c, cw + w_[v], p & h_.neighbours(v));
      c.pop_back();
      p.reset(v);
    }
  }

  const Graph& h_;
  std::vector<W> w_;
  const Budget& budget_;
  std::vector<Vertex> best_;
  W best_w_ = W(0);
  bool timed_out_ = false;
};

inline WeightedSet max_weight_clique_scaled(const Graph& h, const std::vector<Rational>& w, const Budget& budget) {
  BigInt scale = 1;
  for (const auto& x : w) scale = lcm(scale, denominator(x));
  std::vector<BigInt> iw;
  BigInt total = 0;
  for (const auto& x : w) {
    iw.push_back(numerator(x) * (scale / denominator(x)));
    total += iw.back();
  }
  WeightedSet out;
  if (total < BigInt(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> small;
    for (const auto& x : iw) small.push_back(x.convert_to<std::int64_t>());
    WeightedCliqueSearch<std::int64_t> s(h, std::move(small), budget);
    s.run();
    out.vertices = s.best();
    out.weight = Rational(BigInt(s.best_weight()), scale);
    out.exact = !s.timed_out();
  } else {
    WeightedCliqueSearch<BigInt> s(h, iw, budget);
    s.run();
    out.vertices = s.best();
    out.weight = Rational(s.best_weight(), scale);
    out.exact = !s.timed_out();
  }
  return out;
}

inline void check_weights(const Graph& g, const std::vector<Rational>& w) {
  if (w.size() != g.order()) throw dimension_mismatch("one weight per vertex expected");
  for (const auto& x : w)
    if (x < 0) throw precondition_error("weights must be non-negative");
}

}  // namespace detail

/// Exact maximum-weight independent set. On timeout `exact` is false and the
/// set is the best found.
inline WeightedSet max_weight_independent_set(const Graph& g, const std::vector<Rational>& w,
                                              const Budget& budget = Budget::from_env()) {
  detail::check_weights(g, w);
  return detail::max_weight_clique_scaled(complement(g), w, budget);
}

/// Exact maximum-weight clique of g.
inline WeightedSet max_weight_clique(const Graph& g, const std::vector<Rational>& w,
                                     const Budget& budget = Budget::from_env()) {
  detail::check_weights(g, w);
  return detail::max_weight_clique_scaled(g, w, budget);
}

}  // namespace capacity

#endif  // CAPACITY_COMBINAT_HPP
