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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "capacity/combinat.hpp"
#include "capacity/graph_expr.hpp"
#include "oracles.hpp"

using namespace capacity;

namespace {

std::size_t pairwise_meet_edges(std::size_t n, std::size_t k, bool (*adjacent)(std::size_t)) {
  // Independent enumeration of k-subsets via index vectors.
  std::vector<std::vector<int>> sets;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - static_cast<long>(k), pick.end(), 1);
  do {
    std::vector<int> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(static_cast<int>(i));
    sets.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::size_t edges = 0;
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      std::vector<int> meet;
      std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(), std::back_inserter(meet));
      if (adjacent(meet.size())) ++edges;
    }
  return edges;
}

}  // namespace

TEST_CASE("generate: basic families", "[graphcore]") {
  auto c5 = generate("cycle:5");
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);

  auto j = generate("johnson:2,4");
  CHECK(j.order() == 4);
  CHECK(j.edge_count() == 0);
  CHECK(j.labels().front() == "{0,1,2}");
  CHECK(j.labels().back() == "{1,2,3}");

  auto b = generate("alon:2,3,7");
  CHECK(b.order() == 21);
  auto odd_minus_one = [](std::size_t m) { return (m + 1) % 2 == 0; };
  CHECK(b.edge_count() == pairwise_meet_edges(7, 5, odd_minus_one));
  CHECK(b.edge_count() == 105);

  auto j8 = generate("johnson:2,8");
  CHECK(j8.order() == 56);
  CHECK(j8.edge_count() == pairwise_meet_edges(8, 3, [](std::size_t m) { return m % 2 != 0; }));
}

TEST_CASE("generate: errors", "[graphcore]") {
  CHECK_THROWS_AS(generate("cycle"), parse_error);
  CHECK_THROWS_AS(generate("cycle:5 extra"), parse_error);
  CHECK_THROWS_AS(generate("strong(cycle:5)"), parse_error);
  CHECK_THROWS_AS(generate("hypercube:3"), parse_error);
  CHECK_THROWS_AS(generate("johnson:4,8"), precondition_error);
  CHECK_THROWS_AS(generate("alon:2,4,9"), precondition_error);
  CHECK_THROWS_AS(generate("empty:6000"), guard_exceeded);
  CHECK_THROWS_AS(generate("strong(cycle:80,cycle:80)"), guard_exceeded);
  GenerateOptions big;
  big.graph.max_vertices = 7000;
  CHECK(generate("empty:6000", big).order() == 6000);
}

TEST_CASE("graph expressions print canonically and reparse", "[graphcore]") {
  for (const char* text : {"cycle:5", "strong(cycle:5,complement(johnson:2,8))", "lex(alon:2,3,7,universal:2,2,1)",
                           "complement(lex(empty:2,complete:3))"}) {
    auto e = parse_graph_expr(text);
    CHECK(to_string(e) == text);
    CHECK(parse_graph_expr(to_string(e)) == e);
  }
  CHECK(to_string(parse_graph_expr(" strong( cycle:5 , cycle:7 ) ")) == "strong(cycle:5,cycle:7)");
}

TEST_CASE("complement", "[graphcore]") {
  CHECK(complement(empty_graph(4)).same_adjacency(complete_graph(4)));
  auto c7 = cycle_graph(7);
  CHECK(complement(complement(c7)).same_adjacency(c7));
  auto c5c = complement(cycle_graph(5));
  CHECK(c5c.order() == 5);
  CHECK(c5c.edge_count() == 5);
  auto j = generate("johnson:2,5");
  CHECK(complement(j).labels() == j.labels());
}

TEST_CASE("strong product", "[graphcore]") {
  auto c5 = cycle_graph(5);
  auto s = strong_product(c5, c5);
  CHECK(s.order() == 25);
  CHECK(s.edge_count() == 100);
  for (Vertex v = 0; v < 25; ++v) CHECK(s.degree(v) == 8);

  auto h = generate("johnson:2,5");
  CHECK(strong_product(complete_graph(1), h).same_adjacency(h));
  CHECK(strong_product(empty_graph(2), empty_graph(3)).same_adjacency(empty_graph(6)));
  CHECK(s.label(7) == "(1,2)");
}

TEST_CASE("lexicographic product", "[graphcore]") {
  auto c5 = cycle_graph(5);
  auto l = lex_product(c5, empty_graph(2));
  CHECK(l.order() == 10);
  CHECK(l.edge_count() == 20);
  CHECK(lex_product(c5, complete_graph(1)).same_adjacency(c5));
  CHECK(complement(lex_product(c5, empty_graph(2)))
            .same_adjacency(lex_product(complement(c5), complement(empty_graph(2)))));
}

TEST_CASE("product and complement invariants on random graphs", "[graphcore][property]") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 6);
    auto g = oracle::random_graph(rng, size(rng), 0.5);
    auto h = oracle::random_graph(rng, size(rng), 0.5);
    CHECK(complement(complement(g)).same_adjacency(g));
    CHECK(strong_product(g, h).order() == g.order() * h.order());
    CHECK(lex_product(g, h).order() == g.order() * h.order());
    CHECK(complement(lex_product(g, h)).same_adjacency(lex_product(complement(g), complement(h))));
  }
}

TEST_CASE("set predicates", "[graphcore]") {
  auto c5 = cycle_graph(5);
  std::vector<Vertex> s02{0, 2}, s01{0, 1}, s012{0, 1, 2};
  CHECK(is_independent_set(c5, s02));
  CHECK_FALSE(is_independent_set(c5, s01));
  CHECK(is_clique(c5, s01));
  CHECK_FALSE(is_clique(c5, s012));
  std::vector<Vertex> three{0, 2, 3};
  CHECK(is_clique(complete_graph(4), three));
  std::vector<Vertex> bad{0, 9};
  CHECK_THROWS_AS(is_clique(c5, bad), precondition_error);

  auto s = strong_product(c5, c5);
  std::vector<Vertex> diagonal, pentagon_code;
  for (Vertex i = 0; i < 5; ++i) {
    diagonal.push_back(i * 5 + i);
    pentagon_code.push_back(i * 5 + (2 * i) % 5);
  }
  CHECK_FALSE(is_independent_set(s, diagonal));
  CHECK(is_independent_set(s, pentagon_code));
}

TEST_CASE("Johnson independent set from a partition of [n] into (p+2)-blocks", "[graphcore][property]") {
  for (auto [p, n] : {std::pair<std::uint32_t, std::size_t>{2, 8}, {2, 12}, {3, 10}, {2, 4}}) {
    auto g = johnson_graph(p, n);
    std::vector<Vertex> witness;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto x = subset_from_label(g.labels()[v]);
      // X lies inside one block I_i = {i(p+2), ..., (i+1)(p+2)-1}.
      std::size_t lo = static_cast<std::size_t>(std::countr_zero(x));
      std::size_t hi = 63 - static_cast<std::size_t>(std::countl_zero(x));
      if (lo / (p + 2) == hi / (p + 2)) witness.push_back(v);
    }
    CHECK(witness.size() == n);
    CHECK(is_independent_set(g, witness));
  }
}

TEST_CASE("universal graphs", "[graphcore]") {
  auto u21 = universal_graph(2, 2, 1);
  CHECK(u21.order() == 6);
  CHECK(alpha(u21).lower == 2);
  CHECK(universal_graph(2, 3, 1).order() == 28);
  // Each vertex is its own (n,d)-pair: A^T B = I.
  for (const auto& [a, b] : universal_vertices(3, 2, 1)) CHECK(matmul(a.transpose(), b) == FMatrix::identity(1, a.modulus()));
  CHECK_THROWS_AS(universal_graph(2, 2, 3), precondition_error);
  CHECK_THROWS_AS(universal_graph(5, 4, 2), guard_exceeded);
}

TEST_CASE("text graph format", "[graphcore]") {
  auto c5 = cycle_graph(5);
  std::stringstream ss;
  write_graph(ss, c5);
  CHECK(ss.str() == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  CHECK(read_graph(ss).same_adjacency(c5));

  std::stringstream dup("3 2\n0 1\n0 1\n");
  CHECK_THROWS_AS(read_graph(dup), parse_error);
  std::stringstream order("3 1\n2 1\n");
  CHECK_THROWS_AS(read_graph(order), parse_error);
  std::stringstream range("3 1\n0 3\n");
  CHECK_THROWS_AS(read_graph(range), parse_error);
  std::stringstream missing("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(missing), parse_error);
}

TEST_CASE("graph hash depends on adjacency only", "[graphcore]") {
  auto a = generate("johnson:2,6");
  auto b = complement(complement(a));
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != complement(a).hash());
  CHECK(cycle_graph(5).hash() != cycle_graph(6).hash());
}
