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

#include <random>

#include "capacity/graph_expr.hpp"
#include "capacity/json_io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace capacity;

TEST_CASE("matrix schema", "[json]") {
  FMatrix m(2, 3, PrimeModulus(5), std::vector<std::int64_t>{1, 2, 3, 4, 0, 1});
  auto j = to_json(m);
  CHECK(j.dump() == R"({"cols":3,"entries":[1,2,3,4,0,1],"p":5,"rows":2})");
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"p":4,"rows":1,"cols":1,"entries":[1]})")), parse_error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"p":5,"rows":1,"cols":2,"entries":[1]})")), dimension_mismatch);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"p":5,"rows":1,"cols":1,"entries":[7]})")), parse_error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"p":5,"rows":1,"entries":[1]})")), parse_error);
}

TEST_CASE("fractional cover schema", "[json]") {
  auto r = fractional_clique_cover(cycle_graph(5));
  auto j = to_json(r.cover);
  CHECK(j["value"] == "5/2");
  CHECK(j["d"] == 2);
  CHECK(j["classes"].size() == 5);
  CHECK(j["classes"][0]["weight"] == "1/2");
  auto back = fractional_cover_from_json(j);
  CHECK(back.value == r.cover.value);
  CHECK(verify_cover(cycle_graph(5), back));
  CHECK(to_json(back) == j);
}

TEST_CASE("certificate schemas round-trip", "[json][property]") {
  std::mt19937_64 rng(7);
  auto c5 = cycle_graph(5);
  auto drep = cycle_drep(2, 3);
  auto d2 = drep_from_json(Json::parse(to_json(drep).dump()));
  CHECK(d2.matrix == drep.matrix);
  CHECK(verify_drep(c5, d2));

  for (int t = 0; t < 20; ++t) {
    auto g = oracle::random_graph(rng, 1 + t % 6, 0.5);
    auto pr = fixture::random_pairrep(rng, g, 3);
    auto back = pairrep_from_json(Json::parse(to_json(pr).dump()));
    CHECK(back.a == pr.a);
    CHECK(back.b == pr.b);
    CHECK(verify_pairrep(g, back));
    auto sr = subspacerep_from_json(to_json(subspace_from_pairrep(pr)));
    CHECK(verify_subspacerep(g, sr));
  }

  RankRRep rr{1, {2}, FMatrix(2, 2, PrimeModulus(2), std::vector<std::int64_t>{0, 0, 0, 1})};
  auto rr2 = rankrrep_from_json(to_json(rr));
  CHECK(rr2.sizes == rr.sizes);
  CHECK(rr2.matrix == rr.matrix);

  auto fit = johnson_certificate(2, 8);
  auto j = to_json(fit);
  CHECK(j["claimed_rank"] == 8);
  CHECK(j["graph"] == "johnson:2,8");
  CHECK(j.contains("entries"));
  auto fit2 = fit_from_json(j);
  CHECK(verify_certificate(generate("johnson:2,8"), fit2));
  CHECK_FALSE(verify_certificate(generate("johnson:2,9"), fit2));

  CHECK_THROWS_AS(drep_from_json(to_json(rr)), parse_error);
}

TEST_CASE("clique cover schema", "[json]") {
  CliqueCover c{{{0, 1}, {2, 3}, {4}}};
  auto j = to_json(c);
  CHECK(j.dump() == R"({"classes":[[0,1],[2,3],[4]],"type":"clique_cover"})");
  CHECK(clique_cover_from_json(j).classes == c.classes);
}

TEST_CASE("real representation schemas", "[json]") {
  auto u = pentagon_umbrella(1);
  auto back = orthorep_from_json(Json::parse(to_json(u).dump()));
  CHECK(back.vectors == u.vectors);
  CHECK(back.handle == u.handle);
  CHECK(back.tol == u.tol);
  CHECK(theta_upper_from_orthorep(cycle_graph(5), back) == theta_upper_from_orthorep(cycle_graph(5), u));

  MatrixRep m{2, {{{1, 0}}, {{0, 1}}}, {{1, 0}, {0, 1}}, 1e-8};
  auto m2 = matrixrep_from_json(to_json(m));
  CHECK(m2.frames == m.frames);
  CHECK(m2.tol == 1e-8);
}

TEST_CASE("LP schema", "[json]") {
  auto lp = johnson_theta_lp(2, 10);
  auto j = to_json(lp);
  CHECK(j["constraints"].size() == 4);
  CHECK(j["objective_constant"] == "1/1");
  CHECK(j["bounds"][0]["lower"].is_null());
  auto back = lp_from_json(Json::parse(j.dump()));
  auto sol = simplex_solve(back);
  CHECK(sol.value == 15);
  auto sj = to_json(sol);
  CHECK(sj["status"] == "optimal");
  CHECK(sj["value"] == "15/1");
  CHECK_THROWS_AS(lp_from_json(Json::parse(R"({"objective":["1/1"],"constraints":[{"coeffs":["1"],"relation":"<","rhs":"1"}]})")),
                  parse_error);
  CHECK_THROWS_AS(lp_from_json(Json::parse(R"({"objective":["1/0"],"constraints":[]})")), parse_error);
}

TEST_CASE("bound report schema", "[json]") {
  BoundReport r{"hfrac", "cycle:5", BoundValue::rational(2), BoundValue::rational(Rational(5, 2)), {"a.json"},
                std::nullopt, std::nullopt, false};
  CHECK(to_json(r).dump() ==
        R"({"graph":"cycle:5","lower":"2/1","param":"hfrac","upper":"5/2","witness_refs":["a.json"]})");
  auto t = theta_report("cycle:5", 2.0, 2.5, 1e-9, {});
  auto tj = to_json(t);
  CHECK(tj["tol"] == 1e-9);
  CHECK(tj["upper"] == 2.5);
  r.runtime_ms = 3.5;
  CHECK(to_json(r).contains("runtime_ms"));
}

TEST_CASE("serialization is deterministic", "[json]") {
  auto a = to_json(cycle_drep(3, 5)).dump(2);
  auto b = to_json(cycle_drep(3, 5)).dump(2);
  CHECK(a == b);
  auto c = to_json(fractional_clique_cover(generate("strong(cycle:5,cycle:5)")).cover).dump();
  auto d = to_json(fractional_clique_cover(generate("strong(cycle:5,cycle:5)")).cover).dump();
  CHECK(c == d);
}
