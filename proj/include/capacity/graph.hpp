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

#ifndef CAPACITY_GRAPH_HPP
#define CAPACITY_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "capacity/error.hpp"

namespace capacity {

using Vertex = std::size_t;

/// Fixed-capacity dynamic bitset over vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t capacity() const { return n_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// Index of the lowest set bit, or capacity() when empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return n_;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  bool intersects(const VertexSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      auto w = words_[k];
      while (w != 0) {
        out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct GraphLimits {
  std::size_t max_vertices = 5000;
};

/// Finite simple graph with ordered vertices and bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), rows_(n, VertexSet(n)) {}

  std::size_t order() const { return n_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw precondition_error("loops are not allowed (vertex " + std::to_string(u) + ")");
    rows_[u].set(v);
    rows_[v].set(u);
  }

  const VertexSet& neighbours(Vertex v) const { return rows_[v]; }

  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  const std::vector<std::string>& labels() const { return labels_; }
  bool labelled() const { return !labels_.empty(); }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty()) {
      if (labels.size() != n_) throw precondition_error("label count does not match vertex count");
      std::unordered_set<std::string> seen(labels.begin(), labels.end());
      if (seen.size() != labels.size()) throw precondition_error("vertex labels must be unique");
    }
    labels_ = std::move(labels);
  }

  /// Label of v, falling back to its index.
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

  void check_vertex(Vertex v) const {
    if (v >= n_)
      throw precondition_error("vertex " + std::to_string(v) + " out of range for graph of order " +
                               std::to_string(n_));
  }

  /// Adjacency equality; labels are annotations and do not take part.
  bool same_adjacency(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

  /// FNV-1a over the order and the upper-triangle adjacency bits.
  std::string hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t byte) {
      h ^= byte;
      h *= 1099511628211ull;
    };
    for (int s = 0; s < 64; s += 8) mix((n_ >> s) & 0xff);
    std::uint64_t acc = 0;
    int filled = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        acc = (acc << 1) | (adjacent(u, v) ? 1u : 0u);
        if (++filled == 8) {
          mix(acc);
          acc = 0;
          filled = 0;
        }
      }
    if (filled) mix(acc);
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
};

inline void check_order_guard(std::size_t n, const GraphLimits& limits, const char* what) {
  if (n > limits.max_vertices)
    throw guard_exceeded(std::string(what) + " would have " + std::to_string(n) + " vertices (limit " +
                         std::to_string(limits.max_vertices) + ")");
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  out.set_labels(g.labels());
  return out;
}

namespace detail {

inline std::vector<std::string> pair_labels(const Graph& g, const Graph& h) {
  std::vector<std::string> out;
  out.reserve(g.order() * h.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex x = 0; x < h.order(); ++x) out.push_back("(" + g.label(u) + "," + h.label(x) + ")");
  return out;
}

template <class AdjacentPair>
Graph pair_product(const Graph& g, const Graph& h, const GraphLimits& limits, const char* what,
                   AdjacentPair adjacent_pair) {
  const std::size_t m = h.order();
  check_order_guard(g.order() * m, limits, what);
  Graph out(g.order() * m);
  for (Vertex a = 0; a < out.order(); ++a)
    for (Vertex b = a + 1; b < out.order(); ++b)
      if (adjacent_pair(a / m, a % m, b / m, b % m)) out.add_edge(a, b);
  out.set_labels(pair_labels(g, h));
  return out;
}

}  // namespace detail

/// Strong product; vertex (u, x) has index u * |V(h)| + x.
inline Graph strong_product(const Graph& g, const Graph& h, const GraphLimits& limits = {}) {
  return detail::pair_product(g, h, limits, "strong product", [&](Vertex u, Vertex x, Vertex v, Vertex y) {
    return (u == v || g.adjacent(u, v)) && (x == y || h.adjacent(x, y));
  });
}

/// Lexicographic product (each vertex of g blown up into a copy of h); row-major order.
inline Graph lex_product(const Graph& g, const Graph& h, const GraphLimits& limits = {}) {
  return detail::pair_product(g, h, limits, "lexicographic product",
                              [&](Vertex u, Vertex x, Vertex v, Vertex y) {
                                return g.adjacent(u, v) || (u == v && h.adjacent(x, y));
                              });
}

inline Graph cycle_graph(std::size_t k) {
  if (k < 3) throw precondition_error("cycle needs at least 3 vertices");
  Graph g(k);
  for (Vertex i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

inline Graph complete_graph(std::size_t k) {
  Graph g(k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty_graph(std::size_t k) { return Graph(k); }

inline VertexSet to_vertex_set(const Graph& g, std::span<const Vertex> s) {
  VertexSet out(g.order());
  for (auto v : s) {
    g.check_vertex(v);
    out.set(v);
  }
  return out;
}

inline bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
  for (auto v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && g.adjacent(s[i], s[j])) return false;
  return true;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (auto v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j] && !g.adjacent(s[i], s[j])) return false;
  return true;
}

/// Writes the text format: `n m` then one `u v` line per edge with u < v.
inline void write_graph(std::ostream& os, const Graph& g) {
  auto es = g.edges();
  os << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
}

inline Graph read_graph(std::istream& is) {
  long long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw parse_error("graph file: expected header `n m`");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(is >> u >> v)) throw parse_error("graph file: expected " + std::to_string(m) + " edge lines");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("graph file: endpoint out of range on edge " + std::to_string(i));
    if (u >= v) throw parse_error("graph file: edge " + std::to_string(i) + " must satisfy u < v");
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw parse_error("graph file: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (is >> rest) throw parse_error("graph file: trailing content after edge list");
  return g;
}

}  // namespace capacity

#endif  // CAPACITY_GRAPH_HPP
