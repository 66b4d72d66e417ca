#include "locan/padic.hpp"

#include "locan/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using locan::ExtRational;
using locan::Rational;
using locan::make_rational;
using namespace locan::padic;

namespace {

// Direct binomial sum over the box below n, no difference operators.
Rational direct_mahler(const FunctionTable& f, const MultiIndex& n) {
  Rational total = 0;
  MultiIndex k(f.d, 0);
  while (true) {
    bool below = true;
    for (int i = 0; i < f.d; ++i) below = below && k[i] <= n[i];
    if (below) {
      std::size_t flat = 0;
      int dist = 0;
      for (int i = 0; i < f.d; ++i) {
        flat = flat * (f.grid + 1) + k[i];
        dist += n[i] - k[i];
      }
      mpz_class c = 1;
      for (int i = 0; i < f.d; ++i) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n[i], k[i]);
        c *= b;
      }
      total += Rational(dist % 2 ? -c : c) * f.values[flat];
    }
    int i = f.d - 1;
    while (i >= 0 && k[i] == f.grid) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  return total;
}

FunctionTable tabulate(int d, int grid, const std::function<Rational(const MultiIndex&)>& fn) {
  FunctionTable t{d, grid, {}};
  MultiIndex x(d, 0);
  while (true) {
    t.values.push_back(fn(x));
    int i = d - 1;
    while (i >= 0 && x[i] == grid) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return t;
}

Rational random_rational(std::mt19937& rng, long p) {
  static const int units[] = {1, 7, 11, 13};
  std::uniform_int_distribution<int> num(-50, 50), pow(-2, 3), unit(0, 3);
  Rational q(num(rng), units[unit(rng)]);
  const int e = pow(rng);
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), p, e < 0 ? -e : e);
  return e < 0 ? Rational(q / pe) : Rational(q * pe);
}

DistSeries random_poly(std::mt19937& rng, long p, int d, int max_deg, int bound) {
  DistSeries s(p, d, bound);
  std::uniform_int_distribution<int> deg(0, max_deg), terms(1, 4);
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) {
    MultiIndex n(d);
    for (auto& e : n) e = deg(rng);
    s.add_term(n, random_rational(rng, p));
  }
  return s;
}

}  // namespace

TEST(Valuation, Basics) {
  EXPECT_EQ(valuation(Rational(12), 2), ExtRational(2));
  EXPECT_EQ(valuation(make_rational(5, 9), 3), ExtRational(-2));
  EXPECT_EQ(valuation(Rational(7), 5), ExtRational(0));
  EXPECT_TRUE(valuation(Rational(0), 3).is_infinite());
  EXPECT_THROW(valuation(Rational(3), 4), locan::DomainError);
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(epsilon(2), 1);
  EXPECT_EQ(epsilon(3), 0);
}

TEST(PValuation, SpecValidation) {
  EXPECT_NO_THROW(PValuationSpec(3, {Rational(1)}));
  EXPECT_THROW(PValuationSpec(3, {make_rational(1, 2)}), locan::DomainError);
  EXPECT_THROW(PValuationSpec(2, {Rational(1)}), locan::DomainError);
  EXPECT_NO_THROW(PValuationSpec(2, {make_rational(3, 2)}));
  EXPECT_THROW(PValuationSpec(6, {Rational(2)}), locan::DomainError);
}

TEST(PValuation, WordExamples) {
  const PValuationSpec spec(3, {Rational(1), make_rational(3, 2)});
  EXPECT_EQ(p_valuation_of_word(spec, {Rational(1), Rational(0)}), ExtRational(1));
  EXPECT_EQ(p_valuation_of_word(spec, {Rational(3), Rational(1)}), ExtRational(make_rational(3, 2)));
  EXPECT_EQ(p_valuation_of_word(spec, {Rational(9), Rational(3)}), ExtRational(make_rational(5, 2)));
  EXPECT_TRUE(p_valuation_of_word(spec, {Rational(0), Rational(0)}).is_infinite());
  EXPECT_THROW(p_valuation_of_word(spec, {make_rational(1, 3), Rational(0)}), locan::DomainError);
  EXPECT_THROW(p_valuation_of_word(spec, {Rational(1)}), locan::DomainError);
}

TEST(PValuation, AxiomsOnRandomSamples) {
  std::mt19937 rng(17);
  for (long p : {2L, 3L, 5L, 7L}) {
    const Rational floor = make_rational(1, p - 1);
    const PValuationSpec spec(p, {floor + make_rational(1, 7), floor + 1, Rational(3)});
    std::uniform_int_distribution<int> coord(-40, 40);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Rational> g(3), h(3), diff(3), pg(3);
      for (int i = 0; i < 3; ++i) {
        g[i] = coord(rng);
        h[i] = coord(rng);
        diff[i] = g[i] - h[i];
        pg[i] = g[i] * p;
      }
      const auto wg = p_valuation_of_word(spec, g);
      const auto wh = p_valuation_of_word(spec, h);
      // ω(g h^{-1}) >= min(ω(g), ω(h))
      EXPECT_GE(p_valuation_of_word(spec, diff), locan::min(wg, wh));
      // commutators are trivial here, so ω([g,h]) = ∞ >= ω(g) + ω(h)
      // ω(g^p) = ω(g) + 1
      EXPECT_EQ(p_valuation_of_word(spec, pg), wg + ExtRational(1));
      if (!wg.is_infinite()) EXPECT_GT(wg, ExtRational(floor));
    }
  }
}

TEST(CanonicalValuation, ExamplesAndConsistency) {
  EXPECT_EQ(canonical_valuation(3, 1, {Rational(3)}), ExtRational(1));
  EXPECT_EQ(canonical_valuation(3, 2, {Rational(9), Rational(27)}), ExtRational(2));
  EXPECT_EQ(canonical_valuation(2, 1, {Rational(4)}), ExtRational(2));
  EXPECT_EQ(canonical_valuation(2, 2, {Rational(8), Rational(4)}), ExtRational(2));
  EXPECT_TRUE(canonical_valuation(5, 2, {Rational(0), Rational(0)}).is_infinite());
  EXPECT_THROW(canonical_valuation(3, 1, {Rational(1)}), locan::DomainError);
  EXPECT_THROW(canonical_valuation(2, 1, {Rational(2)}), locan::DomainError);
  EXPECT_THROW(canonical_valuation(3, 1, {make_rational(1, 3)}), locan::DomainError);
  EXPECT_TRUE(in_lower_p_series(3, {Rational(9)}, 2));
  EXPECT_FALSE(in_lower_p_series(3, {Rational(9)}, 3));
  EXPECT_TRUE(in_lower_p_series(2, {Rational(8)}, 2));
  EXPECT_FALSE(in_lower_p_series(2, {Rational(8)}, 3));

  // Against the word valuation in the p-basis h_i = p^{1+ε} e_i.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-30, 30);
  for (long p : {2L, 3L, 5L}) {
    const int base = 1 + epsilon(p);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p, base);
    const PValuationSpec spec(p, {Rational(base), Rational(base)});
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Rational> a = {Rational(coord(rng)), Rational(coord(rng))};
      std::vector<Rational> h = {Rational(a[0] * scale), Rational(a[1] * scale)};
      const auto w = canonical_valuation(p, 2, h);
      EXPECT_EQ(w, p_valuation_of_word(spec, a));
      if (!w.is_infinite()) EXPECT_GT(w, ExtRational(make_rational(1, p - 1)));
    }
  }
}

TEST(Mahler, MonomialsAndRoundTrip) {
  const auto square = mahler_coefficients(3, tabulate(1, 4, [](const MultiIndex& x) { return Rational(x[0] * x[0]); }));
  EXPECT_EQ(square.coefficients.size(), 2u);
  EXPECT_EQ(square.coefficients.at({1}), 1);
  EXPECT_EQ(square.coefficients.at({2}), 2);
  EXPECT_EQ(square.degree_bound, 4);

  for (long p : {2L, 3L, 5L}) {
    for (int d = 1; d <= 2; ++d) {
      for (int k = 0; k <= 5; ++k) {
        const int grid = k + 1;
        const auto table = tabulate(d, grid, [k](const MultiIndex& x) {
          mpz_class v = 1;
          for (int xi : x) {
            mpz_class t;
            mpz_ui_pow_ui(t.get_mpz_t(), xi, k);
            v *= t;
          }
          return Rational(v);
        });
        const auto s = mahler_coefficients(p, table);
        EXPECT_EQ(s.degree_bound, d * grid);
        // Every stored coefficient matches the direct sum; degree > k vanishes.
        MultiIndex n(d, 0);
        while (true) {
          const Rational direct = direct_mahler(table, n);
          const auto it = s.coefficients.find(n);
          EXPECT_EQ(it == s.coefficients.end() ? Rational(0) : it->second, direct);
          for (int ni : n)
            if (ni > k) EXPECT_EQ(direct, 0);
          int i = d - 1;
          while (i >= 0 && n[i] == grid) n[i--] = 0;
          if (i < 0) break;
          ++n[i];
        }
        // Round trip on the grid.
        MultiIndex x(d, 0);
        std::size_t flat = 0;
        while (true) {
          EXPECT_EQ(evaluate(s, x), table.values[flat++]);
          int i = d - 1;
          while (i >= 0 && x[i] == grid) x[i--] = 0;
          if (i < 0) break;
          ++x[i];
        }
      }
    }
  }
  EXPECT_THROW(mahler_coefficients(3, FunctionTable{1, 3, {Rational(1)}}), locan::DomainError);
}

TEST(Mahler, Binomials) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(MultiIndex{4, 3}, MultiIndex{2, 1}), 18);
}

TEST(RNorm, Examples) {
  const RNormParam param(make_rational(1, 2), {Rational(1)});
  DistSeries s(3, 1, 10);
  EXPECT_TRUE(r_norm(s, param).is_infinite());
  s.add_term({0}, Rational(3));
  s.add_term({2}, Rational(1));
  // min(1 + 0, 0 + 1/2·2) = 1
  EXPECT_EQ(r_norm(s, param), ExtRational(1));
  s.add_term({1}, make_rational(1, 3));
  EXPECT_EQ(r_norm(s, param), ExtRational(make_rational(-1, 2)));
  EXPECT_EQ(r_norm(DistSeries::one(3, 1, 4), param), ExtRational(0));

  EXPECT_THROW(RNormParam(Rational(0), {Rational(1)}), locan::DomainError);
  EXPECT_THROW(RNormParam(Rational(1), {Rational(1)}), locan::DomainError);
  EXPECT_THROW(RNormParam(make_rational(1, 2), {Rational(0)}), locan::DomainError);
}

TEST(RNorm, MultiplicativeOnPolynomials) {
  std::mt19937 rng(23);
  for (long p : {2L, 3L, 5L}) {
    for (const Rational t : {make_rational(1, 3), make_rational(1, 2), make_rational(4, 5)}) {
      const RNormParam param(t, {Rational(1) + make_rational(1, p - 1), Rational(2)});
      for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_poly(rng, p, 2, 3, 12);
        const auto b = random_poly(rng, p, 2, 3, 12);
        const auto prod = dist_multiply(a, b);
        EXPECT_EQ(r_norm(prod, param), r_norm(a, param) + r_norm(b, param));
      }
    }
  }
}

TEST(DistMultiply, ExamplesAndTruncation) {
  DistSeries a(5, 1, 3), b(5, 1, 5);
  a.add_term({1}, Rational(1));
  a.add_term({0}, Rational(2));
  b.add_term({2}, Rational(3));
  const auto c = dist_multiply(a, b);
  EXPECT_EQ(c.degree_bound(), 3);
  EXPECT_EQ(c.coefficients().size(), 2u);
  EXPECT_EQ(c.coefficients().at({2}), 6);
  EXPECT_EQ(c.coefficients().at({3}), 3);
  a.add_term({4}, Rational(1));  // beyond the bound
  EXPECT_EQ(a.coefficients().count({4}), 0u);
  a.add_term({1}, Rational(-1));
  EXPECT_EQ(a.coefficients().count({1}), 0u);
  EXPECT_EQ(dist_multiply(DistSeries::one(5, 1, 3), a), a);
  EXPECT_THROW(dist_multiply(a, DistSeries(3, 1, 3)), locan::DomainError);
  EXPECT_THROW(dist_multiply(a, DistSeries(5, 2, 3)), locan::DomainError);
}
