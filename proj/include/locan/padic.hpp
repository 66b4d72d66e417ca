#pragma once

#include "locan/rational.hpp"

#include <map>
#include <vector>

namespace locan::padic {

/// Exponents per coordinate, n ∈ N_0^d.
using MultiIndex = std::vector<int>;

bool is_prime(long p);
/// ε_p: 1 for p = 2, 0 for odd p.
int epsilon(long p);

/// v_p(q), +∞ for q = 0. Throws DomainError if p is not prime.
ExtRational valuation(const Rational& q, long p);

/// ω on the model chart Z_p^d → H, (a_i) ↦ Π h_i^{a_i}, from its values
/// on the p-basis h_1..h_d.
class PValuationSpec {
 public:
  /// Throws DomainError unless p is prime and every ω(h_i) > 1/(p−1).
  PValuationSpec(long p, std::vector<Rational> omega);

  long p() const { return p_; }
  int d() const { return static_cast<int>(omega_.size()); }
  const std::vector<Rational>& omega() const { return omega_; }

 private:
  long p_;
  std::vector<Rational> omega_;
};

/// min_i {ω(h_i) + v_p(a_i)}, with +∞ for a = 0.
/// Throws DomainError if some v_p(a_i) < 0 or the arity is wrong.
ExtRational p_valuation_of_word(const PValuationSpec& spec, const std::vector<Rational>& a);

/// h ∈ P_i(H) for the abelian uniform model H = p^{1+ε_p} Z_p^d, where the
/// lower p-series is P_i(H) = p^{i−1} H.
bool in_lower_p_series(long p, const std::vector<Rational>& h, int i);

/// ε_p + max{i >= 1 : h ∈ P_i(H)}; +∞ for h = 0. Throws DomainError if h
/// lies outside the model group.
ExtRational canonical_valuation(long p, int d, const std::vector<Rational>& h);

/// Values of f on the grid {0..D}^d, row-major (last coordinate fastest).
struct FunctionTable {
  int d = 1;
  int grid = 0;  // D
  std::vector<Rational> values;
};

struct MahlerSeries {
  long p = 2;
  int d = 1;
  int degree_bound = 0;                       // max total degree stored
  std::map<MultiIndex, Rational> coefficients;  // nonzero only
};

/// c_n = Σ_{k<=n} (−1)^{|n−k|} C(n,k) f(k) for all n in {0..D}^d, by
/// iterated forward differences along each axis. Throws DomainError on a
/// table of the wrong size.
MahlerSeries mahler_coefficients(long p, const FunctionTable& f);

/// Σ_n c_n C(x, n) at a grid point x ∈ N_0^d.
Rational evaluate(const MahlerSeries& s, const MultiIndex& x);

/// Binomial C(x, n) for integers x >= 0.
mpz_class binomial(long x, long n);
/// Π C(x_i, n_i)
mpz_class binomial(const MultiIndex& x, const MultiIndex& n);

/// Truncated power series Σ d_n b^n in commuting b_1..b_d.
class DistSeries {
 public:
  DistSeries(long p, int d, int degree_bound);

  static DistSeries one(long p, int d, int degree_bound);

  long p() const { return p_; }
  int d() const { return d_; }
  int degree_bound() const { return degree_bound_; }
  const std::map<MultiIndex, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c·b^n; terms beyond the degree bound are dropped.
  void add_term(const MultiIndex& n, const Rational& c);
  friend bool operator==(const DistSeries&, const DistSeries&) = default;

 private:
  long p_;
  int d_;
  int degree_bound_;
  std::map<MultiIndex, Rational> coeffs_;
};

/// r = p^{−t}; τ_i = ω(h_i).
class RNormParam {
 public:
  /// Throws DomainError unless 0 < t < 1 and every τ_i > 0.
  RNormParam(Rational t, std::vector<Rational> tau);

  const Rational& t() const { return t_; }
  const std::vector<Rational>& tau() const { return tau_; }

 private:
  Rational t_;
  std::vector<Rational> tau_;
};

/// Exponent form of ‖s‖_r: inf_n {v_p(d_n) + t·τ(n)}, so ‖s‖_r = p^{−value}.
/// +∞ for the zero series.
ExtRational r_norm(const DistSeries& s, const RNormParam& param);

/// Convolution of commuting power series, truncated at the smaller bound.
/// Throws DomainError if p or d differ.
DistSeries dist_multiply(const DistSeries& s, const DistSeries& u);

}  // namespace locan::padic
