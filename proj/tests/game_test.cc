// Copyright 2026 The mmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmr/game.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "vertex_enumeration.h"

namespace mmr {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;

void ExpectCertified(const GameMatrix& a, const Equilibrium& eq) {
  EXPECT_LE(BestPureCol(a, eq.row_probs).value, eq.value + 1e-7);
  EXPECT_GE(BestPureRow(a, eq.col_probs).value, eq.value - 1e-7);
  double rs = 0.0;
  double cs = 0.0;
  for (double p : eq.row_probs) {
    EXPECT_GE(p, 0.0);
    rs += p;
  }
  for (double q : eq.col_probs) {
    EXPECT_GE(q, 0.0);
    cs += q;
  }
  EXPECT_NEAR(rs, 1.0, 1e-9);
  EXPECT_NEAR(cs, 1.0, 1e-9);
}

TEST(SolveZeroSumTest, OneByOne) {
  const GameMatrix a = GameMatrix::FromRows({{5}});
  const Equilibrium eq = SolveZeroSum(a);
  EXPECT_DOUBLE_EQ(eq.value, 5.0);
  EXPECT_THAT(eq.row_probs, ElementsAre(1.0));
  EXPECT_THAT(eq.col_probs, ElementsAre(1.0));
}

TEST(SolveZeroSumTest, TwoEdgeRegretGame) {
  const GameMatrix a = GameMatrix::FromRows({{0, 3}, {7, 0}});
  const Equilibrium eq = SolveZeroSum(a);
  EXPECT_NEAR(eq.value, 2.1, 1e-12);
  EXPECT_THAT(eq.row_probs, ElementsAre(DoubleNear(0.7, 1e-12),
                                        DoubleNear(0.3, 1e-12)));
  EXPECT_THAT(eq.col_probs, ElementsAre(DoubleNear(0.3, 1e-12),
                                        DoubleNear(0.7, 1e-12)));
  ExpectCertified(a, eq);
}

TEST(SolveZeroSumTest, PureSaddle) {
  const GameMatrix a = GameMatrix::FromRows({{1, 2}, {3, 4}});
  const Equilibrium eq = SolveZeroSum(a);
  EXPECT_NEAR(eq.value, 2.0, 1e-12);
  EXPECT_THAT(eq.row_probs, ElementsAre(DoubleNear(1, 1e-12), DoubleNear(0, 1e-12)));
  EXPECT_THAT(eq.col_probs, ElementsAre(DoubleNear(0, 1e-12), DoubleNear(1, 1e-12)));
}

TEST(SolveZeroSumTest, ConstantMatrixPicksFirstStrategies) {
  const GameMatrix a(3, 4, -2.5);
  const Equilibrium eq = SolveZeroSum(a);
  EXPECT_DOUBLE_EQ(eq.value, -2.5);
  EXPECT_THAT(eq.row_probs, ElementsAre(1, 0, 0));
  EXPECT_THAT(eq.col_probs, ElementsAre(1, 0, 0, 0));
}

TEST(SolveZeroSumTest, RejectsInvalidMatrices) {
  EXPECT_THROW(SolveZeroSum(GameMatrix()), std::invalid_argument);
  EXPECT_THROW(GameMatrix::FromRows({{1, 2}, {3}}), std::invalid_argument);
  GameMatrix a(1, 1);
  a(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(SolveZeroSum(a), std::invalid_argument);
}

TEST(BestPureTest, Examples) {
  const GameMatrix a = GameMatrix::FromRows({{0, 3}, {7, 0}});
  const std::vector<double> q = {0.3, 0.7};
  const std::vector<double> p = {0.7, 0.3};
  PureResponse r = BestPureRow(a, q);
  EXPECT_EQ(r.index, 0u);
  EXPECT_NEAR(r.value, 2.1, 1e-12);
  r = BestPureCol(a, p);
  EXPECT_EQ(r.index, 0u);
  EXPECT_NEAR(r.value, 2.1, 1e-12);

  const GameMatrix b = GameMatrix::FromRows({{1, 2}, {3, 4}});
  const std::vector<double> q2 = {0, 1};
  const std::vector<double> p2 = {1, 0};
  EXPECT_EQ(BestPureRow(b, q2).index, 0u);
  EXPECT_EQ(BestPureRow(b, q2).value, 2.0);
  EXPECT_EQ(BestPureCol(b, p2).index, 1u);
  EXPECT_EQ(BestPureCol(b, p2).value, 2.0);
}

TEST(GameMatrixTest, GrowsByRowsAndColumns) {
  GameMatrix a;
  a.AppendCol(std::vector<double>{});
  a.AppendRow(std::vector<double>{1.0});
  a.AppendCol(std::vector<double>{2.0});
  a.AppendRow(std::vector<double>{3.0, 4.0});
  ASSERT_EQ(a.rows(), 2u);
  ASSERT_EQ(a.cols(), 2u);
  EXPECT_EQ(a(0, 0), 1.0);
  EXPECT_EQ(a(0, 1), 2.0);
  EXPECT_EQ(a(1, 0), 3.0);
  EXPECT_EQ(a(1, 1), 4.0);
  EXPECT_THROW(a.AppendRow(std::vector<double>{1.0}), std::invalid_argument);
}

TEST(SolveZeroSumTest, MatchesVertexEnumeration) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    GameMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    }
    const Equilibrium eq = SolveZeroSum(a);
    ASSERT_NEAR(eq.value, testing::VertexEnumerationValue(a), 1e-6);
    ExpectCertified(a, eq);
    double maxmin = -1e300;
    double minmax = 1e300;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double m = 1e300;
      for (std::size_t i = 0; i < a.rows(); ++i) m = std::min(m, a(i, j));
      maxmin = std::max(maxmin, m);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      double m = -1e300;
      for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, a(i, j));
      minmax = std::min(minmax, m);
    }
    EXPECT_LE(maxmin, eq.value + 1e-9);
    EXPECT_GE(minmax, eq.value - 1e-9);
  }
}

TEST(SolveZeroSumTest, ShiftEquivariant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> entry(-10, 10);
  for (int trial = 0; trial < 100; ++trial) {
    GameMatrix a(4, 5);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 5; ++j) a(i, j) = entry(rng);
    }
    GameMatrix b = a;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 5; ++j) b(i, j) += 17.25;
    }
    const Equilibrium ea = SolveZeroSum(a);
    const Equilibrium eb = SolveZeroSum(b);
    EXPECT_NEAR(eb.value, ea.value + 17.25, 1e-7);
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(ea.row_probs[i] > 1e-9, eb.row_probs[i] > 1e-9);
    }
  }
}

// Larger degenerate games of the kind the restricted regret game produces:
// many duplicated and dominated columns with small integer entries.
TEST(SolveZeroSumTest, DegenerateLargeGamesAreCertified) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    GameMatrix a(50, 120);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    }
    ExpectCertified(a, SolveZeroSum(a));
  }
}

}  // namespace
}  // namespace mmr
