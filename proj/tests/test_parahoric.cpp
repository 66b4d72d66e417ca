#include "locan/parahoric.hpp"

#include "locan/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using locan::roots::build_root_system;
using locan::roots::Coords;
using locan::roots::Root;
using locan::roots::RootSystem;
using namespace locan::parahoric;

namespace {

// w^{-1}α by applying the letters of w's word left to right as reflections.
Coords inverse_apply(const RootSystem& rs, const std::vector<int>& word, Coords alpha) {
  for (int s : word) alpha = rs.reflect(s, alpha);
  return alpha;
}

std::set<std::set<std::size_t>> brute_double_cosets(const WeylGroup& w, const ParabolicType& i,
                                                     const ParabolicType& j) {
  const auto wi = parabolic_elements(w, i);
  const auto wj = parabolic_elements(w, j);
  std::set<std::set<std::size_t>> out;
  for (std::size_t x = 0; x < w.order(); ++x) {
    std::set<std::size_t> coset;
    for (auto u : wi)
      for (auto v : wj) coset.insert(w.multiply(w.multiply(u, x), v));
    out.insert(coset);
  }
  return out;
}

std::vector<ParabolicType> all_subsets(int rank) {
  std::vector<ParabolicType> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    ParabolicType s;
    for (int b = 0; b < rank; ++b)
      if (mask & (1 << b)) s.insert(b);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(WeylGroup, Orders) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"A4", 120}, {"B2", 8},  {"C2", 8},
      {"G2", 12}, {"B3", 48}, {"C3", 48}, {"D4", 192}, {"F4", 1152}};
  for (const auto& [name, order] : cases) {
    const auto rs = build_root_system(name);
    const auto w = build_weyl_group(rs);
    EXPECT_EQ(w.order(), order) << name;
    EXPECT_EQ(w.element(w.longest_element()).length(), rs.num_positive_roots()) << name;
  }
  EXPECT_THROW(build_weyl_group(build_root_system(std::string("E6"))), locan::ResourceError);
  EXPECT_THROW(build_weyl_group(build_root_system(std::string("A3")), 20), locan::ResourceError);
}

TEST(WeylGroup, LongestWordsAndLabels) {
  const auto a2 = build_weyl_group(build_root_system('A', 2));
  EXPECT_EQ(a2.element(a2.longest_element()).label(), "s1s2s1");
  EXPECT_EQ(a2.element(a2.identity_index()).label(), "e");
  const auto b2 = build_weyl_group(build_root_system('B', 2));
  EXPECT_EQ(b2.element(b2.longest_element()).length(), 4u);
  const auto g2 = build_weyl_group(build_root_system('G', 2));
  EXPECT_EQ(g2.element(g2.longest_element()).length(), 6u);
  // w0 = −1 in B2 and G2.
  for (const auto* w : {&b2, &g2}) {
    const auto& m = w->element(w->longest_element()).matrix();
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) EXPECT_EQ(m[r][c], r == c ? -1 : 0);
  }
}

TEST(WeylGroup, GroupStructureAndWords) {
  for (const char* name : {"A3", "B3", "G2", "C3"}) {
    const auto rs = build_root_system(std::string(name));
    const auto w = build_weyl_group(rs);
    for (std::size_t a = 0; a < w.order(); ++a) {
      const auto& e = w.element(a);
      EXPECT_EQ(e.length(), inversion_count(rs, e.matrix()));
      EXPECT_EQ(element_from_word(rs, e.word()).matrix(), e.matrix());
      EXPECT_EQ(w.multiply(a, w.inverse(a)), w.identity_index());
      EXPECT_EQ(w.element(w.inverse(a)).length(), e.length());
      EXPECT_EQ(reduced_word(rs, e.matrix()), e.word());
    }
    // Braid relation for a non-reduced input collapses correctly.
    EXPECT_EQ(element_from_word(rs, {0, 0}).length(), 0u);
  }
}

TEST(DoubleCosets, Examples) {
  const auto w = build_weyl_group(build_root_system('A', 2));
  EXPECT_EQ(double_cosets(w, {}, {}).representatives.size(), 6u);
  EXPECT_EQ(double_cosets(w, {}, {0}).representatives.size(), 3u);
  EXPECT_EQ(double_cosets(w, {0}, {0}).representatives.size(), 2u);
  EXPECT_EQ(double_cosets(w, {0}, {1}).representatives.size(), 2u);
  EXPECT_EQ(double_cosets(w, {0, 1}, {}).representatives.size(), 1u);
  const auto a1 = build_weyl_group(build_root_system('A', 1));
  EXPECT_EQ(double_cosets(a1, {}, {}).representatives.size(), 2u);
  EXPECT_EQ(double_cosets(a1, {0}, {}).representatives.size(), 1u);
  const auto d = double_cosets(w, {0}, {0});
  EXPECT_EQ(w.element(d.representatives[0]).label(), "e");
  EXPECT_EQ(w.element(d.representatives[1]).label(), "s2");
}

TEST(DoubleCosets, AgreeWithBruteForceAndAreMinimal) {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    const auto rs = build_root_system(std::string(name));
    const auto w = build_weyl_group(rs);
    for (const auto& i : all_subsets(rs.rank())) {
      for (const auto& j : all_subsets(rs.rank())) {
        const auto d = double_cosets(w, i, j);
        const auto brute = brute_double_cosets(w, i, j);
        ASSERT_EQ(d.representatives.size(), brute.size()) << name;
        std::set<std::set<std::size_t>> mine;
        std::size_t total = 0;
        for (std::size_t k = 0; k < d.members.size(); ++k) {
          mine.insert(std::set<std::size_t>(d.members[k].begin(), d.members[k].end()));
          total += d.members[k].size();
          const std::size_t rep = d.representatives[k];
          EXPECT_EQ(d.coset_of[rep], k);
          // Unique element of minimal length in its coset.
          for (auto x : d.members[k]) {
            EXPECT_EQ(d.coset_of[x], k);
            if (x != rep) EXPECT_GT(w.element(x).length(), w.element(rep).length());
          }
          // Representatives of a representative's coset are themselves.
          const auto again = double_cosets(w, i, j);
          EXPECT_EQ(again.representatives[again.coset_of[rep]], rep);
        }
        EXPECT_EQ(mine, brute);
        EXPECT_EQ(total, w.order());
      }
    }
  }
}

TEST(IwahoriPartition, A2Example) {
  const auto rs = build_root_system('A', 2);
  const auto p = iwahori_root_partition(rs, {0}, element_from_word(rs, {1}));
  const std::vector<Root> plus = {Root({1, 1}), Root({0, -1})};
  const std::vector<Root> minus = {Root({0, 1}), Root({-1, -1})};
  EXPECT_EQ(std::set<Root>(p.roots_plus.begin(), p.roots_plus.end()), std::set<Root>(plus.begin(), plus.end()));
  EXPECT_EQ(std::set<Root>(p.roots_minus.begin(), p.roots_minus.end()), std::set<Root>(minus.begin(), minus.end()));
}

TEST(IwahoriPartition, ExhaustiveAgainstReflectionOracle) {
  for (const char* name : {"A1", "A2", "B2", "C2", "G2", "A3", "B3"}) {
    const auto rs = build_root_system(std::string(name));
    const auto w = build_weyl_group(rs);
    const auto all = rs.all_roots();
    EXPECT_EQ(reduced_roots(rs), all);
    for (const auto& i : all_subsets(rs.rank())) {
      for (const auto& e : w.elements()) {
        const auto p = iwahori_root_partition(rs, i, e);
        std::vector<Root> plus, minus;
        for (const auto& a : all) {
          if (in_parabolic_span(a, i)) continue;
          (Root(inverse_apply(rs, e.word(), a.coords())).is_positive() ? plus : minus).push_back(a);
        }
        EXPECT_EQ(p.roots_plus, plus) << name << " " << e.label();
        EXPECT_EQ(p.roots_minus, minus) << name << " " << e.label();
        // Disjoint and exhaustive.
        std::size_t outside = 0;
        for (const auto& a : all) outside += in_parabolic_span(a, i) ? 0 : 1;
        EXPECT_EQ(p.roots_plus.size() + p.roots_minus.size(), outside);
      }
    }
  }
}

TEST(IwahoriPartition, ParabolicSpan) {
  EXPECT_TRUE(in_parabolic_span(Root({1, 0, 0}), {0}));
  EXPECT_FALSE(in_parabolic_span(Root({1, 1, 0}), {0}));
  EXPECT_TRUE(in_parabolic_span(Root({-1, -1, 0}), {0, 1}));
  EXPECT_FALSE(in_parabolic_span(Root({0, 1}), {}));
}
