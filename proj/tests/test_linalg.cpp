#include "locan/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using locan::Rational;
using locan::make_rational;
using locan::linalg::RationalMatrix;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(rows.size(), rows.at(0).size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

TEST(Linalg, NullspaceOfRankOneMatrix) {
  // x + 2y + 3z = 0
  const auto basis = locan::linalg::nullspace(from_rows({{1, 2, 3}, {2, 4, 6}}));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], (locan::linalg::Vector{-2, 1, 0}));
  EXPECT_EQ(basis[1], (locan::linalg::Vector{-3, 0, 1}));
}

TEST(Linalg, FullRankHasTrivialKernel) {
  EXPECT_TRUE(locan::linalg::nullspace(from_rows({{1, 1}, {1, -1}})).empty());
  EXPECT_EQ(locan::linalg::rank(from_rows({{1, 1}, {1, -1}})), 2u);
}

TEST(Linalg, SolveDetectsInconsistency) {
  auto a = from_rows({{1, 1}, {2, 2}});
  EXPECT_FALSE(locan::linalg::solve(a, {1, 3}).has_value());
  auto x = locan::linalg::solve(a, {1, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + (*x)[1], Rational(1));
}

TEST(Linalg, KernelVectorsAreAnnihilatedOnRandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 2 + trial % 5;
    RationalMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = make_rational(entry(rng), 1 + trial % 3);
    }
    const auto basis = locan::linalg::nullspace(a);
    EXPECT_EQ(basis.size() + locan::linalg::rank(a), cols);
    for (const auto& v : basis) {
      for (std::size_t r = 0; r < rows; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += a(r, c) * v[c];
        EXPECT_EQ(s, 0);
      }
    }
  }
}
