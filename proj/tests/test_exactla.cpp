/*
   Copyright 2026 The jacsyz Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "jacsyz/graded.hpp"
#include "oracle.hpp"

namespace {

using namespace jacsyz;

RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int density_pct, int spread) {
  std::uniform_int_distribution<int> pct(0, 99), coef(-spread, spread), den(1, 4);
  std::vector<RatMatrix::Entry> e;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (pct(rng) < density_pct) e.push_back({i, j, ratio(coef(rng), den(rng))});
  return RatMatrix(rows, cols, e);
}

/// A*B with inner dimension r, so rank at most r.
RatMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t r, std::mt19937_64& rng) {
  const RatMatrix a = random_matrix(rows, r, rng, 70, 3), b = random_matrix(r, cols, rng, 70, 3);
  std::vector<RatMatrix::Entry> e;
  for (const auto& x : a.entries())
    for (const auto& y : b.entries())
      if (x.col == y.row) e.push_back({x.row, y.col, x.value * y.value});
  return RatMatrix(rows, cols, e);
}

oracle::Dense dense(const RatMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
  for (const auto& e : m.entries()) d[e.row][e.col] = e.value;
  return d;
}

const LinAlgOptions kFast{RankMode::fast, kDefaultSeed};

TEST(Rank, TrivialMatrices) {
  EXPECT_EQ(rank(RatMatrix::identity(2)).rank, 2u);
  EXPECT_EQ(rank(RatMatrix(4, 6)).rank, 0u);
  EXPECT_EQ(kernel_dim(RatMatrix(3, 6)), 6u);
  EXPECT_EQ(kernel_dim(RatMatrix::identity(5)), 0u);
  EXPECT_EQ(rank(RatMatrix(0, 0)).rank, 0u);
}

TEST(Rank, AgreesWithDenseOracle) {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    const RatMatrix m = rep % 2 ? random_matrix(rows, cols, rng, 40, 4)
                                : low_rank(rows, cols, 1 + rng() % std::min(rows, cols), rng);
    const std::size_t expected = oracle::dense_rank(dense(m));
    EXPECT_EQ(rank(m).rank, expected);
    EXPECT_EQ(rank(m, kFast).rank, expected);
    EXPECT_EQ(rank(m.transpose()).rank, expected);
    EXPECT_EQ(kernel_dim(m) + rank(m).rank, m.cols());
  }
}

TEST(Rank, FastModeReportsPrimes) {
  std::mt19937_64 rng(5);
  const RatMatrix m = low_rank(10, 9, 4, rng);
  const RankResult r = rank(m, kFast);
  EXPECT_EQ(r.method, RankMethod::modular_agreed);
  EXPECT_GE(r.primes_used.size(), 2u);
  for (auto p : r.primes_used) EXPECT_GT(p, std::uint64_t{1} << 60);
  EXPECT_EQ(rank(m, kFast).primes_used, r.primes_used);  // seeded
}

TEST(Rank, ColumnDeletionIsSubadditive) {
  std::mt19937_64 rng(8);
  const RatMatrix m = random_matrix(7, 9, rng, 50, 3);
  std::vector<RatMatrix::Entry> keep;
  for (const auto& e : m.entries())
    if (e.col != 4) keep.push_back({e.row, e.col < 4 ? e.col : e.col - 1, e.value});
  const std::size_t r = rank(m).rank, r2 = rank(RatMatrix(7, 8, keep)).rank;
  EXPECT_LE(r2, r);
  EXPECT_LE(r, r2 + 1);
}

TEST(Rank, FermatCubicDegreeTwoMultiplication) {
  const JacobianData j = JacobianData::from(parse_poly("x^3+y^3+z^3", {"x", "y", "z"}));
  GradedEngine g(j);
  const RatMatrix m = g.multiplication_matrix(2);
  EXPECT_EQ(m.rows(), 15u);
  EXPECT_EQ(m.cols(), 18u);
  EXPECT_EQ(oracle::dense_rank(dense(m)), 15u);
  EXPECT_EQ(rank(m).rank, 15u);
  EXPECT_EQ(kernel_dim(m), 3u);
}

TEST(Kernel, SmallCases) {
  EXPECT_TRUE(kernel_basis(RatMatrix::identity(3)).empty());
  const RatMatrix row(1, 2, {{0, 0, Rational(1)}, {0, 1, Rational(1)}});
  const auto b = kernel_basis(row);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (std::vector<Rational>{Rational(1), Rational(-1)}));
}

TEST(Kernel, VectorsAreExactNullVectors) {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
    const RatMatrix m = low_rank(rows, cols, 1 + rng() % std::min(rows, cols), rng);
    const auto basis = kernel_basis(m);
    EXPECT_EQ(basis.size(), kernel_dim(m));
    for (const auto& v : basis)
      for (const auto& y : m.multiply(v)) EXPECT_EQ(y, 0);
    // independence
    EXPECT_EQ(oracle::dense_rank(basis), basis.size());
  }
}

TEST(Kernel, KoszulVectorOfFermatCubic) {
  const std::vector<std::string> xyz = {"x", "y", "z"};
  const JacobianData j = JacobianData::from(parse_poly("x^3+y^3+z^3", xyz));
  GradedEngine g(j);
  const RatMatrix m = g.multiplication_matrix(2);
  const MonomialBasis& src = g.basis(2);
  std::vector<Rational> v(m.cols(), Rational(0));
  v[0 * src.size() + src.index({0, 2, 0})] = 1;   // y^2 e_x
  v[1 * src.size() + src.index({2, 0, 0})] = -1;  // -x^2 e_y
  for (const auto& y : m.multiply(v)) EXPECT_EQ(y, 0);
  oracle::Dense span = kernel_basis(m);
  EXPECT_TRUE(oracle::in_span(span, v));
}

TEST(Echelon, ReductionIsCanonical) {
  std::mt19937_64 rng(4);
  const RatMatrix m = low_rank(6, 8, 3, rng);
  IntegerEchelon a(8), b(8);
  const auto rows = m.row_vectors();
  for (const auto& r : rows) a.insert(r);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) b.insert(*it);
  EXPECT_EQ(a.rank(), b.rank());
  const SparseVector<Rational> probe{{0, Rational(1)}, {3, Rational(2, 3)}, {7, Rational(-5)}};
  EXPECT_EQ(a.reduce(probe), b.reduce(probe));
  for (const auto& r : rows) EXPECT_TRUE(a.contains(r));
}

}  // namespace
