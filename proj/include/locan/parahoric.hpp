#pragma once

#include "locan/roots.hpp"

#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace locan::parahoric {

/// Element of the Weyl group, canonically identified by its integer
/// matrix on simple-root coordinates (column j = w(α_j)).
class WeylElement {
 public:
  WeylElement(roots::IntMatrix matrix, std::vector<int> word);

  const roots::IntMatrix& matrix() const { return matrix_; }
  /// Reduced word of 0-based simple-reflection indices, w = s_{word[0]} ... s_{word[l-1]}.
  const std::vector<int>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }

  roots::Coords apply(const roots::Coords& beta) const;
  /// "e" or "s1s2s1".
  std::string label() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

 private:
  roots::IntMatrix matrix_;
  std::vector<int> word_;
};

using IntMatrix = roots::IntMatrix;

IntMatrix identity_matrix(int rank);
IntMatrix simple_reflection_matrix(const roots::RootSystem& rs, int i);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// #{α > 0 : w(α) < 0}.
std::size_t inversion_count(const roots::RootSystem& rs, const IntMatrix& w);
/// Reduced word by right-descent: repeatedly strip the smallest i with
/// w(α_i) < 0, so the last letter is the smallest right descent.
std::vector<int> reduced_word(const roots::RootSystem& rs, const IntMatrix& w);

/// Simple-root index subset (0-based).
using ParabolicType = std::set<int>;

inline constexpr std::size_t kDefaultWeylCap = 10000;

/// All elements of W (or of a parabolic subgroup), indexed by matrix.
class WeylGroup {
 public:
  const roots::RootSystem& root_system() const { return rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t index_of(const IntMatrix& m) const;
  const WeylElement& element(std::size_t k) const { return elements_.at(k); }
  std::size_t identity_index() const { return 0; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t longest_element() const;

 private:
  friend WeylGroup build_weyl_group(const roots::RootSystem&, std::size_t);
  explicit WeylGroup(roots::RootSystem rs) : rs_(std::move(rs)) {}

  roots::RootSystem rs_;
  std::vector<WeylElement> elements_;  // BFS order by length, identity first
  std::map<IntMatrix, std::size_t> index_;
};

/// Breadth-first enumeration from the identity. Throws ResourceError once
/// more than `cap` elements appear.
WeylGroup build_weyl_group(const roots::RootSystem& rs, std::size_t cap = kDefaultWeylCap);

/// W_I as a list of indices into W.
std::vector<std::size_t> parabolic_elements(const WeylGroup& w, const ParabolicType& i);

struct DoubleCosetDecomposition {
  std::vector<std::size_t> representatives;  // indices into W, sorted by (length, word)
  std::vector<std::size_t> coset_of;         // W index -> position in representatives
  std::vector<std::vector<std::size_t>> members;
};

/// W_I \ W / W_J by orbits of (u, v)·w = u w v^{-1}. Representatives are of
/// minimal length, ties broken by lexicographic word.
DoubleCosetDecomposition double_cosets(const WeylGroup& w, const ParabolicType& i, const ParabolicType& j);

struct RootPartition {
  std::vector<roots::Root> roots_plus;   // w^{-1}α > 0
  std::vector<roots::Root> roots_minus;  // w^{-1}α < 0
};

/// Φ^red; the identity for the reduced split types modeled here.
std::vector<roots::Root> reduced_roots(const roots::RootSystem& rs);
/// Roots in the span of {α_i : i ∈ I}.
bool in_parabolic_span(const roots::Root& alpha, const ParabolicType& i);

/// Split of Φ^red \ Φ^red_I by the sign of w^{-1}α. Both lists follow the
/// order of RootSystem::all_roots.
RootPartition iwahori_root_partition(const roots::RootSystem& rs, const ParabolicType& i, const WeylElement& w);

/// Element from a word of 0-based simple indices (need not be reduced).
WeylElement element_from_word(const roots::RootSystem& rs, const std::vector<int>& word);

}  // namespace locan::parahoric
