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
#include <numeric>
#include <random>

#include "capacity/ffmat.hpp"
#include "capacity/generators.hpp"
#include "oracles.hpp"

using namespace capacity;

namespace {

FMatrix johnson_incidence(std::uint32_t p, std::size_t n) {
  auto sets = k_subsets(n, p + 1, 100000);
  FMatrix m(n, sets.size(), PrimeModulus(p));
  for (std::size_t c = 0; c < sets.size(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      if ((sets[c] >> i) & 1u) m(i, c) = 1;
  return m;
}

FMatrix permute(const FMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  return m.submatrix(rows, cols);
}

}  // namespace

TEST_CASE("prime modulus", "[ffmat]") {
  CHECK_THROWS_AS(PrimeModulus(4), precondition_error);
  CHECK_THROWS_AS(PrimeModulus(1), precondition_error);
  PrimeModulus f(7);
  CHECK(f.mul(f.inv(3), 3) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(next_prime_after(3) == 5);
  CHECK(next_prime_after(7) == 11);
}

TEST_CASE("rank", "[ffmat]") {
  CHECK(rank(FMatrix::identity(5, PrimeModulus(2))) == 5);
  CHECK(rank(FMatrix::ones(4, 4, PrimeModulus(3))) == 1);
  auto inc = johnson_incidence(2, 4);
  CHECK(inc.rows() == 4);
  CHECK(inc.cols() == 4);
  CHECK(rank(inc) == oracle::brute_rank(inc));
  CHECK(rank(inc) == 4);

  auto m = FMatrix::ones(3, 3, PrimeModulus(5));
  auto copy = m;
  (void)rank(m);
  CHECK(m == copy);
}

TEST_CASE("rank agrees with the row-subset oracle", "[ffmat][property]") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int t = 0; t < 40; ++t) {
      std::uniform_int_distribution<std::size_t> dim(1, 5);
      auto m = oracle::random_matrix(rng, dim(rng), dim(rng), p);
      CHECK(rank(m) == oracle::brute_rank(m));
    }
  }
}

TEST_CASE("matmul", "[ffmat]") {
  std::mt19937_64 rng(11);
  auto m = oracle::random_matrix(rng, 3, 4, 5);
  CHECK(matmul(FMatrix::identity(3, PrimeModulus(5)), m) == m);
  FMatrix a(2, 1, PrimeModulus(2), std::vector<std::int64_t>{1, 1});
  FMatrix b(2, 1, PrimeModulus(2), std::vector<std::int64_t>{0, 1});
  CHECK(matmul(a.transpose(), b) == FMatrix::identity(1, PrimeModulus(2)));
  CHECK_THROWS_AS(matmul(m, m), dimension_mismatch);
  CHECK_THROWS_AS(matmul(FMatrix::identity(2, PrimeModulus(2)), FMatrix::identity(2, PrimeModulus(3))),
                  dimension_mismatch);

  // Columns of the Johnson incidence matrix have weight p+1 = 3, odd.
  auto inc = johnson_incidence(2, 6);
  auto gram = matmul(inc.transpose(), inc);
  for (std::size_t i = 0; i < gram.rows(); ++i) CHECK(gram(i, i) == 1);
}

TEST_CASE("kronecker", "[ffmat]") {
  PrimeModulus f5(5);
  CHECK(kronecker(FMatrix::identity(2, f5), FMatrix::identity(3, f5)) == FMatrix::identity(6, f5));
  std::mt19937_64 rng(3);
  auto m = oracle::random_matrix(rng, 3, 3, 5);
  CHECK(rank(kronecker(FMatrix::identity(2, f5), m)) == 2 * rank(m));
  auto k = kronecker(oracle::random_matrix(rng, 2, 3, 5), oracle::random_matrix(rng, 4, 5, 5));
  CHECK(k.rows() == 8);
  CHECK(k.cols() == 15);
}

TEST_CASE("rank inequalities on random matrices", "[ffmat][property]") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int t = 0; t < 200; ++t) {
      std::uniform_int_distribution<std::size_t> dim(1, 4);
      auto a = oracle::random_matrix(rng, dim(rng), dim(rng), p);
      auto b = oracle::random_matrix(rng, a.cols(), dim(rng), p);
      CHECK(rank(matmul(a, b)) <= std::min(rank(a), rank(b)));
      auto c = oracle::random_matrix(rng, dim(rng), dim(rng), p);
      CHECK(rank(kronecker(a, c)) == rank(a) * rank(c));

      std::vector<std::size_t> rows(a.rows()), cols(a.cols());
      std::iota(rows.begin(), rows.end(), 0);
      std::iota(cols.begin(), cols.end(), 0);
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      CHECK(rank(permute(a, rows, cols)) == rank(a));
    }
  }
}

TEST_CASE("select_full_rank_submatrix", "[ffmat]") {
  PrimeModulus f2(2);
  auto idx = select_full_rank_submatrix(FMatrix::identity(3, f2), 2);
  CHECK(idx.rows == std::vector<std::size_t>{0, 1});
  CHECK(idx.cols == std::vector<std::size_t>{0, 1});

  FMatrix z(3, 3, f2, std::vector<std::int64_t>{0, 0, 0, 0, 1, 0, 1, 0, 0});
  auto one = select_full_rank_submatrix(z, 1);
  CHECK(one.rows.front() != 0);
  CHECK(rank(z.submatrix(one.rows, one.cols)) == 1);

  auto inc = johnson_incidence(2, 8);
  auto gram = matmul(inc.transpose(), inc);
  auto r = rank(gram);
  auto full = select_full_rank_submatrix(gram, r);
  CHECK(rank(gram.submatrix(full.rows, full.cols)) == r);
  CHECK_THROWS_AS(select_full_rank_submatrix(gram, r + 1), precondition_error);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    auto m = oracle::random_matrix(rng, 4, 5, 3);
    auto rk = rank(m);
    if (rk == 0) continue;
    auto s = select_full_rank_submatrix(m, rk);
    CHECK(rank(m.submatrix(s.rows, s.cols)) == rk);
  }
}

TEST_CASE("inverse and span dimension", "[ffmat]") {
  std::mt19937_64 rng(5);
  PrimeModulus f(5);
  for (int t = 0; t < 50; ++t) {
    auto m = oracle::random_matrix(rng, 3, 3, 5);
    if (rank(m) < 3) {
      CHECK_THROWS_AS(inverse(m), precondition_error);
      continue;
    }
    CHECK(matmul(m, inverse(m)) == FMatrix::identity(3, f));
  }
  std::vector<FMatrix> blocks{FMatrix::identity(3, f), FMatrix::ones(3, 1, f)};
  CHECK(span_dimension(blocks, 3, f) == 3);
}
