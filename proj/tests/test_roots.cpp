#include "locan/roots.hpp"

#include "locan/errors.hpp"
#include "locan/lie.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using locan::Rational;
using locan::make_rational;
using locan::Scalar;
using namespace locan::roots;

namespace {

std::set<Coords> positive_set(const RootSystem& rs) {
  std::set<Coords> out;
  for (const auto& r : rs.positive_roots()) out.insert(r.coords());
  return out;
}

struct TypeCase {
  char type;
  int rank;
  std::size_t positive_count;
};

const std::vector<TypeCase> kAllTypes = {
    {'A', 1, 1},   {'A', 2, 3},   {'A', 3, 6},   {'A', 4, 10},  {'B', 2, 4},   {'B', 3, 9},
    {'B', 4, 16},  {'C', 2, 4},   {'C', 3, 9},   {'C', 4, 16},  {'D', 4, 12},  {'D', 5, 20},
    {'E', 6, 36},  {'E', 7, 63},  {'E', 8, 120}, {'F', 4, 24},  {'G', 2, 6},
};

}  // namespace

TEST(RootSystem, RankOneAndTwoRoots) {
  EXPECT_EQ(positive_set(build_root_system('A', 1)), (std::set<Coords>{{1}}));
  EXPECT_EQ(positive_set(build_root_system('A', 2)), (std::set<Coords>{{1, 0}, {0, 1}, {1, 1}}));
  // B2 with α1 long, α2 short: the short roots are α2, α1+α2; α1+2α2 is long.
  const auto b2 = build_root_system('B', 2);
  EXPECT_EQ(positive_set(b2), (std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(b2.inner_product({1, 1}, {1, 1}), b2.inner_product({0, 1}, {0, 1}));
  EXPECT_EQ(b2.inner_product({1, 2}, {1, 2}), b2.inner_product({1, 0}, {1, 0}));
  EXPECT_EQ(positive_set(build_root_system('C', 2)), (std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
  EXPECT_EQ(positive_set(build_root_system('G', 2)),
            (std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}));
}

TEST(RootSystem, BourbakiCartanMatrices) {
  EXPECT_EQ(build_root_system('B', 2).cartan_matrix(), (IntMatrix{{2, -1}, {-2, 2}}));
  EXPECT_EQ(build_root_system('C', 2).cartan_matrix(), (IntMatrix{{2, -2}, {-1, 2}}));
  EXPECT_EQ(build_root_system('G', 2).cartan_matrix(), (IntMatrix{{2, -3}, {-1, 2}}));
  EXPECT_EQ(build_root_system('B', 2).symmetrizer(), (std::vector<int>{2, 1}));
  EXPECT_EQ(build_root_system('G', 2).symmetrizer(), (std::vector<int>{1, 3}));
}

TEST(RootSystem, PbwOrderIsHeightThenLex) {
  const auto a2 = build_root_system("A2");
  ASSERT_EQ(a2.positive_roots().size(), 3u);
  EXPECT_EQ(a2.positive_roots()[0].coords(), (Coords{1, 0}));
  EXPECT_EQ(a2.positive_roots()[1].coords(), (Coords{0, 1}));
  EXPECT_EQ(a2.positive_roots()[2].coords(), (Coords{1, 1}));
}

TEST(RootSystem, InvariantsForEverySupportedType) {
  for (const auto& tc : kAllTypes) {
    SCOPED_TRACE(std::string(1, tc.type) + std::to_string(tc.rank));
    const auto rs = build_root_system(tc.type, tc.rank);
    const int r = rs.rank();
    EXPECT_EQ(rs.num_positive_roots(), tc.positive_count);

    // Diagonal 2, off-diagonal <= 0.
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (i == j) {
          EXPECT_EQ(rs.cartan_matrix()[i][j], 2);
        } else {
          EXPECT_LE(rs.cartan_matrix()[i][j], 0);
        }
      }
    }
    // d_i a_ij symmetric and positive definite: LDL^T pivots positive.
    std::vector<std::vector<Rational>> b(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) b[i][j] = rs.symmetrizer()[i] * rs.cartan_matrix()[i][j];
    }
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) EXPECT_EQ(b[i][j], b[j][i]);
    }
    for (int k = 0; k < r; ++k) {
      ASSERT_GT(b[k][k], 0);
      for (int i = k + 1; i < r; ++i) {
        const Rational f = b[i][k] / b[k][k];
        for (int j = k; j < r; ++j) b[i][j] -= f * b[k][j];
      }
    }
    // Simple roots are members; each s_i negates α_i and permutes the rest of Φ+.
    const auto pos = positive_set(rs);
    for (int i = 0; i < r; ++i) {
      EXPECT_TRUE(pos.count(rs.simple_root(i).coords()));
      EXPECT_EQ(Root(rs.reflect(i, rs.simple_root(i).coords())), -rs.simple_root(i));
      std::set<Coords> image;
      for (const auto& beta : pos) {
        if (beta == rs.simple_root(i).coords()) continue;
        const Coords img = rs.reflect(i, beta);
        EXPECT_TRUE(Root(img).is_positive());
        image.insert(img);
      }
      EXPECT_EQ(image.size(), pos.size() - 1);
      EXPECT_FALSE(image.count(rs.simple_root(i).coords()));
    }

    // δ(H_{α_i}) = 1 and pairing with α_j reproduces a_ij.
    const Weight delta = half_sum_positive_roots(rs);
    for (int i = 0; i < r; ++i) {
      EXPECT_EQ(delta.pairings[i], Scalar(Rational(1)));
      for (int j = 0; j < r; ++j) {
        const Scalar v = pair_with_coroot(rs, weight_of(rs, rs.simple_root(j).coords()), rs.simple_root(i));
        EXPECT_EQ(v, Scalar(Rational(rs.cartan_matrix()[i][j])));
      }
    }
  }
}

TEST(RootSystem, UnsupportedTypesRaiseConfigurationErrors) {
  EXPECT_THROW(build_root_system('B', 1), locan::UnsupportedError);
  EXPECT_THROW(build_root_system('D', 3), locan::UnsupportedError);
  EXPECT_THROW(build_root_system('E', 5), locan::UnsupportedError);
  EXPECT_THROW(build_root_system('H', 3), locan::UnsupportedError);
  EXPECT_THROW(build_root_system('A', 9), locan::UnsupportedError);
  EXPECT_THROW(build_root_system("Gx"), locan::UnsupportedError);
}

TEST(PairWithCoroot, SimpleAndSimplyLacedCases) {
  const auto a2 = build_root_system('A', 2);
  const Weight lam = Weight::from_rationals({Rational(3), Rational(5)});
  EXPECT_EQ(pair_with_coroot(a2, lam, Root({1, 0})), Scalar(Rational(3)));
  EXPECT_EQ(pair_with_coroot(a2, lam, Root({1, 1})), Scalar(Rational(8)));
  EXPECT_EQ(pair_with_coroot(a2, lam, Root({-1, -1})), Scalar(Rational(-8)));
}

TEST(PairWithCoroot, B2HighestRootOnDelta) {
  const auto b2 = build_root_system('B', 2);
  const Root highest({1, 2});
  const Scalar value = pair_with_coroot(b2, half_sum_positive_roots(b2), highest);
  // Matrix route: H_β = 2[X_β, X_-β]/β(...) decomposed in h_i.
  const auto alg = locan::lie::realize(b2);
  const auto k = alg.coroot_coordinates(highest);
  EXPECT_EQ(value, Scalar(k[0] + k[1]));
  EXPECT_EQ(value, Scalar(Rational(2)));
}

TEST(PairWithCoroot, AgreesWithMatrixCorootsOnRandomWeights) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9);
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4"}) {
    SCOPED_TRACE(name);
    const auto rs = build_root_system(std::string(name));
    const auto alg = locan::lie::realize(rs);
    for (const auto& beta : rs.all_roots()) {
      const auto k = alg.coroot_coordinates(beta);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> lam(rs.rank());
        for (auto& x : lam) x = make_rational(num(rng), 1 + trial);
        Rational expected = 0;
        for (int i = 0; i < rs.rank(); ++i) expected += k[i] * lam[i];
        EXPECT_EQ(pair_with_coroot(rs, Weight::from_rationals(lam), beta), Scalar(expected)) << beta.label();
      }
    }
  }
}

TEST(PairWithCoroot, RejectsNonRoots) {
  const auto a2 = build_root_system('A', 2);
  const Weight lam = Weight::from_rationals({Rational(1), Rational(1)});
  EXPECT_THROW(pair_with_coroot(a2, lam, Root({2, 0})), locan::DomainError);
  EXPECT_THROW(pair_with_coroot(a2, lam, Root({1, -1})), locan::DomainError);
  EXPECT_THROW(pair_with_coroot(a2, Weight::from_rationals({Rational(1)}), Root({1, 0})), locan::DomainError);
}

TEST(PairWithCoroot, GenericEntriesPropagate) {
  const auto a2 = build_root_system('A', 2);
  const Weight lam({Scalar::make_generic(), Scalar(Rational(2))});
  EXPECT_TRUE(pair_with_coroot(a2, lam, Root({1, 0})).generic);
  EXPECT_FALSE(pair_with_coroot(a2, lam, Root({0, 1})).generic);
  EXPECT_TRUE(pair_with_coroot(a2, lam, Root({1, 1})).generic);
}

TEST(Root, Labels) {
  EXPECT_EQ(Root({1, 2}).label(), "a1+2a2");
  EXPECT_EQ(Root({-1, -1}).label(), "-a1-a2");
  EXPECT_EQ(Root({0, 1}).height(), 1);
}
