#pragma once

#include "locan/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace locan::roots {

/// Integer vector in the basis of simple roots.
using Coords = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

enum class DynkinType { A, B, C, D, E, F, G };

char type_letter(DynkinType t);
std::optional<DynkinType> type_from_letter(char c);

/// A root in simple-root coordinates. Positive roots have all coordinates
/// >= 0, negative roots all <= 0.
class Root {
 public:
  explicit Root(Coords coords);

  const Coords& coords() const { return coords_; }
  bool is_positive() const;
  int height() const;
  Root operator-() const;

  /// "a1+2a2", "-a1-a2"
  std::string label() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  Coords coords_;
};

/// Linear form on the Cartan subalgebra, stored as its values on the simple
/// coroots: pairings[i] = λ(H_{α_i}).
struct Weight {
  std::vector<Scalar> pairings;

  Weight() = default;
  explicit Weight(std::vector<Scalar> p) : pairings(std::move(p)) {}
  static Weight from_rationals(const std::vector<Rational>& values);

  std::size_t size() const { return pairings.size(); }
  bool has_generic() const;

  Weight& operator+=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

/// Split root datum of a simple Lie algebra, Bourbaki node numbering.
///
/// Cartan convention: a_ij = α_j(H_{α_i}) = <α_j, α_i^∨>, so
/// [h_i, e_j] = a_ij e_j. Immutable after construction.
class RootSystem {
 public:
  RootSystem(DynkinType type, int rank);

  DynkinType type() const { return type_; }
  char type_label() const { return type_letter(type_); }
  int rank() const { return rank_; }
  std::string name() const;

  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// Positive integers d_i with (d_i a_ij) symmetric; d_i ∝ (α_i, α_i).
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  /// Sorted by height, ties by descending lexicographic coordinates, so the
  /// simple roots come first as α_1, ..., α_r.
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Positive roots followed by their negatives in the same order.
  std::vector<Root> all_roots() const;

  std::size_t num_positive_roots() const { return positive_.size(); }
  std::optional<std::size_t> positive_index(const Coords& c) const;
  bool is_root(const Coords& c) const;

  Root simple_root(int i) const;
  /// β(H_{α_i}) for a root-lattice vector β, i.e. the pairing vector of β.
  std::vector<int> simple_pairings(const Coords& beta) const;
  /// (β, γ) in the normalization (α_i, α_i) = 2 d_i.
  Rational inner_product(const Coords& beta, const Coords& gamma) const;
  /// s_i(β) = β − β(H_{α_i}) α_i.
  Coords reflect(int i, const Coords& beta) const;

 private:
  DynkinType type_;
  int rank_;
  IntMatrix cartan_;
  std::vector<int> symmetrizer_;
  std::vector<Root> positive_;
};

/// Throws UnsupportedError when (label, rank) is not a supported Dynkin type.
/// Supported: A1–A8, B2–B8, C2–C8, D4–D8, E6–E8, F4, G2.
RootSystem build_root_system(char type_label, int rank);
/// Parses names like "A2", "b3", "G2".
RootSystem build_root_system(const std::string& name);

/// δ = ½ Σ_{α>0} α as a weight.
Weight half_sum_positive_roots(const RootSystem& rs);

/// The weight whose pairings are β(H_{α_i}).
Weight weight_of(const RootSystem& rs, const Coords& beta);

/// λ(H_β) with H_β = Σ c_i (d_i / d_β) H_{α_i} for β = Σ c_i α_i.
/// Throws DomainError when β is not a root of rs.
Scalar pair_with_coroot(const RootSystem& rs, const Weight& lambda, const Root& beta);

}  // namespace locan::roots
