#pragma once

#include "locan/lie.hpp"
#include "locan/rational.hpp"
#include "locan/roots.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace locan::verma {

/// Exponents n_β of f_β, one per positive root in PBW order.
using Exponent = std::vector<int>;

/// Sparse vector in M(λ) on the PBW basis Π_β f_β^{n_β} ⊗ v_λ.
/// Zero coefficients are never stored.
class PBWVector {
 public:
  using Terms = std::map<Exponent, Rational>;

  PBWVector() = default;
  static PBWVector monomial(Exponent n, Rational c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Exponent& n) const;

  void add(const Exponent& n, const Rational& c);
  PBWVector& operator+=(const PBWVector& other);
  PBWVector& operator-=(const PBWVector& other);
  PBWVector& operator*=(const Rational& c);
  friend PBWVector operator+(PBWVector a, const PBWVector& b) { return a += b; }
  friend PBWVector operator-(PBWVector a, const PBWVector& b) { return a -= b; }
  friend PBWVector operator*(const Rational& c, PBWVector v) { return v *= c; }
  friend bool operator==(const PBWVector&, const PBWVector&) = default;

 private:
  Terms terms_;
};

enum class GeneratorKind { E, F, H };

/// e_i, f_i or h_i; index is 0-based.
struct Generator {
  GeneratorKind kind;
  int index;

  static Generator e(int i) { return {GeneratorKind::E, i}; }
  static Generator f(int i) { return {GeneratorKind::F, i}; }
  static Generator h(int i) { return {GeneratorKind::H, i}; }
};

/// Algebra data shared by all Verma modules over the same realization:
/// the PBW order and the brackets of basis elements with lowering root
/// vectors, precomputed from the matrices.
class LoweringData {
 public:
  explicit LoweringData(lie::MatrixLieAlgebra algebra);

  const lie::MatrixLieAlgebra& algebra() const { return algebra_; }
  const roots::RootSystem& root_system() const { return algebra_.root_system(); }
  const std::vector<roots::Root>& pbw_order() const { return root_system().positive_roots(); }
  /// [basis(a), f_{β_k}] on the basis of the algebra.
  const lie::BasisCombination& bracket_with_lowering(std::size_t a, std::size_t k) const {
    return table_[a * pbw_order().size() + k];
  }
  /// β_k(H_{α_i}).
  int root_pairing(std::size_t k, int i) const { return pairings_[k][i]; }

 private:
  lie::MatrixLieAlgebra algebra_;
  std::vector<lie::BasisCombination> table_;
  std::vector<std::vector<int>> pairings_;
};

std::shared_ptr<const LoweringData> make_lowering_data(const roots::RootSystem& rs);

/// M(λ) = U(g) ⊗_{U(b)} K_λ for a rational weight λ. Immutable.
class VermaModule {
 public:
  /// Throws UnsupportedError for generic weights (no exact arithmetic on
  /// the transcendental part) and DomainError on a rank mismatch.
  VermaModule(std::shared_ptr<const LoweringData> data, const roots::Weight& lambda);
  VermaModule(const roots::RootSystem& rs, const roots::Weight& lambda);

  const LoweringData& data() const { return *data_; }
  const std::shared_ptr<const LoweringData>& shared_data() const { return data_; }
  const roots::RootSystem& root_system() const { return data_->root_system(); }
  const std::vector<roots::Root>& pbw_order() const { return data_->pbw_order(); }
  const std::vector<Rational>& highest_weight() const { return lambda_; }
  roots::Weight highest_weight_as_weight() const { return roots::Weight::from_rationals(lambda_); }

  PBWVector highest_weight_vector() const;
  /// ν = Σ n_β β, the depth of the monomial below λ.
  roots::Coords depth(const Exponent& n) const;
  /// Common depth of all terms; nullopt for a non-homogeneous or zero vector.
  std::optional<roots::Coords> homogeneous_depth(const PBWVector& v) const;
  /// Pairings (λ − ν)(H_{α_i}).
  std::vector<Rational> weight_at_depth(const roots::Coords& nu) const;

  /// Action of a Chevalley generator. Throws DomainError if v is not
  /// homogeneous. The zero vector maps to zero.
  PBWVector act(const Generator& g, const PBWVector& v) const;

  /// "f(a1)^2*f(a1+a2)" style rendering; "1" for the empty monomial.
  std::string monomial_label(const Exponent& n) const;
  std::string format(const PBWVector& v) const;

 private:
  friend class Rewriter;
  std::shared_ptr<const LoweringData> data_;
  std::vector<Rational> lambda_;
};

/// PBW exponents spanning the weight space M_{λ−ν}, in increasing
/// lexicographic order. Empty unless ν is a nonnegative root combination.
std::vector<Exponent> weight_space_basis(const VermaModule& m, const roots::Coords& nu);
/// Same, addressed by the weight μ itself (pairings).
std::vector<Exponent> weight_space_basis(const VermaModule& m, const roots::Weight& mu);

/// Root-lattice coordinates of λ − μ, if integral.
std::optional<roots::Coords> depth_of_weight(const VermaModule& m, const roots::Weight& mu);

struct SingularSpace {
  roots::Coords depth;              // ν with μ = λ − ν
  std::vector<PBWVector> basis;     // annihilated by every e_i
};

/// Kernel of v ↦ (e_1 v, ..., e_r v) on M_{λ−ν}. Throws DomainError unless
/// ν is a nonzero nonnegative root combination.
SingularSpace singular_vectors(const VermaModule& m, const roots::Coords& nu);

inline constexpr int kDefaultOracleCap = 12;

struct OracleResult {
  int bound = 0;
  /// Depths of height 1..bound that carry singular vectors, in scan order
  /// (height, then descending lexicographic).
  std::vector<SingularSpace> found;

  bool reducible() const { return !found.empty(); }
};

/// Scans every weight λ − ν with 1 <= height(ν) <= bound for singular
/// vectors. Throws DomainError if bound < 1 and ResourceError if
/// bound > cap.
OracleResult simplicity_oracle(const VermaModule& m, int bound, int cap = kDefaultOracleCap);

/// All ν >= 0 of the given height, descending lexicographic.
std::vector<roots::Coords> depths_of_height(int rank, int height);

}  // namespace locan::verma
