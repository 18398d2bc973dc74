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
#include <optional>
#include <random>

#include "capacity/rational.hpp"
#include "capacity/simplex.hpp"

using namespace capacity;

namespace {

Rational q(long long n, long long d = 1) { return ratio(n, d); }

Constraint row(std::vector<Rational> a, Relation rel, Rational b) { return {std::move(a), rel, std::move(b)}; }

// The displayed LP for theta of the Johnson-type graph, built directly here.
LinearProgram johnson_lp(long long p, long long n) {
  LinearProgram lp;
  lp.objective = {q(1), q(1)};
  lp.objective_constant = 1;
  for (long long u = 0; u <= p + 1; ++u) {
    Rational a1((p + 1 - u) * (n - p - u - 1) - u, (p + 1) * (n - p - 1));
    Rational ap1(binomial(n - p - u - 1, p + 1 - u), binomial(n - p - 1, p + 1));
    if (u % 2) ap1 = -ap1;
    lp.constraints.push_back(row({a1, ap1}, Relation::greater_equal, q(-1)));
  }
  return lp;
}

// Two-variable oracle: enumerate every intersection of two tight lines.
std::optional<Rational> vertex_enumeration_max(const LinearProgram& lp) {
  struct Line {
    Rational a, b, c;
  };
  std::vector<Line> lines;
  for (const auto& c : lp.constraints) lines.push_back({c.coeffs[0], c.coeffs[1], c.rhs});
  for (std::size_t j = 0; j < 2; ++j) {
    auto b = lp.bound(j);
    Rational e0 = j == 0 ? 1 : 0, e1 = j == 1 ? 1 : 0;
    if (b.lower) lines.push_back({e0, e1, *b.lower});
    if (b.upper) lines.push_back({e0, e1, *b.upper});
  }
  auto feasible = [&](const Rational& x, const Rational& y) {
    for (const auto& c : lp.constraints) {
      Rational lhs = c.coeffs[0] * x + c.coeffs[1] * y;
      if (c.relation == Relation::less_equal && lhs > c.rhs) return false;
      if (c.relation == Relation::greater_equal && lhs < c.rhs) return false;
      if (c.relation == Relation::equal && lhs != c.rhs) return false;
    }
    for (std::size_t j = 0; j < 2; ++j) {
      auto b = lp.bound(j);
      const auto& v = j == 0 ? x : y;
      if ((b.lower && v < *b.lower) || (b.upper && v > *b.upper)) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t k = i + 1; k < lines.size(); ++k) {
      Rational det = lines[i].a * lines[k].b - lines[k].a * lines[i].b;
      if (det == 0) continue;
      Rational x = (lines[i].c * lines[k].b - lines[k].c * lines[i].b) / det;
      Rational y = (lines[i].a * lines[k].c - lines[k].a * lines[i].c) / det;
      if (!feasible(x, y)) continue;
      Rational v = lp.objective_constant + lp.objective[0] * x + lp.objective[1] * y;
      if (!best || v > *best) best = v;
    }
  return best;
}

}  // namespace

TEST_CASE("rational formatting and parsing", "[exactq]") {
  CHECK(to_string(q(7, 2)) == "7/2");
  CHECK(to_string(q(15)) == "15");
  CHECK(to_fraction_string(q(15)) == "15/1");
  CHECK(to_string(q(4, -6)) == "-2/3");
  CHECK(parse_rational("260/11") == q(260, 11));
  CHECK(parse_rational("-3") == q(-3));
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("x"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/"), parse_error);
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("simplex: small instances", "[exactq]") {
  LinearProgram one;
  one.objective = {q(1)};
  one.constraints = {row({q(1)}, Relation::less_equal, q(3, 2))};
  auto s1 = simplex_solve(one);
  REQUIRE(s1.status == LpStatus::optimal);
  CHECK(s1.value == q(3, 2));
  CHECK(check_solution(one, s1));

  LinearProgram box;
  box.objective = {q(1), q(1)};
  box.constraints = {row({q(1), q(0)}, Relation::less_equal, q(1)), row({q(0), q(1)}, Relation::less_equal, q(1)),
                     row({q(1), q(1)}, Relation::less_equal, q(3, 2))};
  auto s2 = simplex_solve(box);
  REQUIRE(s2.status == LpStatus::optimal);
  CHECK(s2.value == q(3, 2));
  CHECK(check_solution(box, s2));

  auto j = johnson_lp(2, 8);
  auto s3 = simplex_solve(j);
  REQUIRE(s3.status == LpStatus::optimal);
  CHECK(s3.value == 8);
  CHECK(check_solution(j, s3));
}

TEST_CASE("simplex: infeasible and unbounded", "[exactq]") {
  LinearProgram inf;
  inf.objective = {q(1)};
  inf.constraints = {row({q(1)}, Relation::greater_equal, q(2)), row({q(1)}, Relation::less_equal, q(1))};
  CHECK(simplex_solve(inf).status == LpStatus::infeasible);

  LinearProgram unb;
  unb.objective = {q(1), q(0)};
  unb.constraints = {row({q(1), q(-1)}, Relation::less_equal, q(1))};
  CHECK(simplex_solve(unb).status == LpStatus::unbounded);

  LinearProgram eq;
  eq.objective = {q(1), q(2)};
  eq.bounds = {VariableBound::non_negative(), VariableBound::non_negative()};
  eq.constraints = {row({q(1), q(1)}, Relation::equal, q(4)), row({q(1), q(-1)}, Relation::greater_equal, q(1))};
  auto s = simplex_solve(eq);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.value == q(11, 2));
  CHECK(s.assignment == std::vector<Rational>{q(5, 2), q(3, 2)});
  CHECK(check_solution(eq, s));
}

TEST_CASE("check_solution catches tiny violations", "[exactq]") {
  LinearProgram box;
  box.objective = {q(1)};
  box.bounds = {VariableBound{q(0), q(1)}};
  box.constraints = {row({q(1)}, Relation::less_equal, q(1, 2))};
  LpSolution inside{LpStatus::optimal, q(1, 4), {q(1, 4)}, {}};
  CHECK(check_solution(box, inside));
  LpSolution over{LpStatus::optimal, q(1, 2) + q(1, 1000000000), {q(1, 2) + q(1, 1000000000)}, {}};
  CHECK_FALSE(check_solution(box, over));
  LpSolution wrong_dual{LpStatus::optimal, q(1, 4), {q(1, 4)}, {q(1)}};
  CHECK_FALSE(check_solution(box, wrong_dual));
  LpSolution short_assignment{LpStatus::optimal, q(0), {}, {}};
  CHECK_THROWS_AS(check_solution(box, short_assignment), dimension_mismatch);

  auto j = johnson_lp(2, 10);
  auto s = simplex_solve(j);
  CHECK(s.value == 15);
  CHECK(check_solution(j, s));
}

TEST_CASE("simplex matches vertex enumeration on random two-variable LPs", "[exactq][property]") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> rel(0, 2);
  int optimal = 0;
  for (int t = 0; t < 300; ++t) {
    LinearProgram lp;
    lp.objective = {q(coef(rng)), q(coef(rng))};
    lp.bounds = {VariableBound{q(-6), q(6)}, VariableBound{q(-6), std::nullopt}};
    if (t % 3 == 0) lp.bounds[1].upper = q(7);
    int m = 1 + t % 4;
    for (int i = 0; i < m; ++i) {
      auto r = rel(rng);
      lp.constraints.push_back(row({q(coef(rng)), q(coef(rng))},
                                   r == 0 ? Relation::less_equal : r == 1 ? Relation::greater_equal : Relation::equal,
                                   q(coef(rng), 1 + t % 3)));
    }
    auto sol = simplex_solve(lp);
    auto oracle = vertex_enumeration_max(lp);
    if (!oracle) {
      // Either infeasible, or unbounded in the open y direction.
      CHECK(sol.status != LpStatus::optimal);
      continue;
    }
    if (sol.status == LpStatus::unbounded) continue;  // vertices exist but the ray is open
    REQUIRE(sol.status == LpStatus::optimal);
    ++optimal;
    if (lp.bounds[1].upper) CHECK(sol.value == *oracle);
    CHECK(sol.value >= *oracle);
    CHECK(check_solution(lp, sol));
  }
  CHECK(optimal > 50);
}

TEST_CASE("strong duality and row-permutation invariance", "[exactq][property]") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<int> coef(-4, 6);
  for (int t = 0; t < 100; ++t) {
    LinearProgram lp;
    const std::size_t n = 3 + t % 3;
    for (std::size_t j = 0; j < n; ++j) lp.objective.push_back(q(coef(rng)));
    lp.bounds.assign(n, VariableBound{q(0), q(5)});
    if (t % 2) lp.bounds[0] = VariableBound::free();
    for (int i = 0; i < 5; ++i) {
      std::vector<Rational> a;
      for (std::size_t j = 0; j < n; ++j) a.push_back(q(coef(rng)));
      lp.constraints.push_back(row(a, i % 3 == 2 ? Relation::greater_equal : Relation::less_equal, q(coef(rng) + 4)));
    }
    auto sol = simplex_solve(lp);
    if (sol.status != LpStatus::optimal) continue;
    CHECK(check_solution(lp, sol));
    auto shuffled = lp;
    std::shuffle(shuffled.constraints.begin(), shuffled.constraints.end(), rng);
    auto sol2 = simplex_solve(shuffled);
    REQUIRE(sol2.status == LpStatus::optimal);
    CHECK(sol2.value == sol.value);
    CHECK(check_solution(shuffled, sol2));
  }
}
