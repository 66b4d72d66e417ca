#pragma once

#include "locan/rational.hpp"
#include "locan/roots.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace locan::lie {

/// Square matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  Rational trace() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// xy − yx. Throws std::invalid_argument on a size mismatch.
Matrix bracket(const Matrix& x, const Matrix& y);

/// Sparse coordinates on the Chevalley-style basis of a MatrixLieAlgebra.
using BasisCombination = std::vector<std::pair<std::size_t, Rational>>;

/// Matrix realization of a classical split simple Lie algebra.
///
///   A_n: sl_{n+1}, traceless matrices.
///   B_n: so_{2n+1}, C_n: sp_{2n}, D_n: so_{2n}, each preserving the form
///   J with J(k, N-1-k) = 1, except that for sp_{2n} the lower half of the
///   anti-diagonal carries -1.
///
/// The Cartan subalgebra is diagonal; e_i is the standard simple root
/// matrix, f_i a multiple of its transpose, and h_i = [e_i, f_i] with
/// α_i(h_i) = 2. Root vectors are iterated brackets of simple ones.
///
/// Basis ids: positive root vectors 0..P-1 (in RootSystem::positive_roots
/// order), negative root vectors P..2P-1 (same order), h_1..h_r at
/// 2P..2P+r-1.
class MatrixLieAlgebra {
 public:
  const roots::RootSystem& root_system() const { return rs_; }
  /// Size N of the defining N×N matrices.
  std::size_t dimension() const { return n_; }
  std::size_t algebra_dimension() const { return basis_.size(); }
  const Matrix& form() const { return form_; }

  const Matrix& e(int i) const { return basis_[positive_id(i)]; }
  const Matrix& f(int i) const { return basis_[negative_id(i)]; }
  const Matrix& h(int i) const { return basis_[cartan_id(i)]; }
  /// X_β for β ∈ Φ. Throws DomainError otherwise.
  const Matrix& root_vector(const roots::Root& beta) const;

  std::size_t num_positive() const { return num_pos_; }
  std::size_t positive_id(std::size_t k) const { return k; }
  std::size_t negative_id(std::size_t k) const { return num_pos_ + k; }
  std::size_t cartan_id(std::size_t i) const { return 2 * num_pos_ + i; }
  const Matrix& basis(std::size_t id) const { return basis_.at(id); }
  /// Root-lattice weight of a basis element (zero for Cartan elements).
  roots::Coords basis_weight(std::size_t id) const;

  /// Membership in the realized algebra.
  bool contains(const Matrix& x) const;

  /// Coordinates of [basis(a), basis(b)] on the basis, computed from the
  /// matrices. Throws std::logic_error if the bracket leaves the algebra.
  BasisCombination bracket_in_basis(std::size_t a, std::size_t b) const;

  /// Coordinates of a diagonal element of the algebra in h_1..h_r.
  std::vector<Rational> cartan_coordinates(const Matrix& diag) const;

  /// H_β = 2[X_β, X_{-β}] / β([X_β, X_{-β}]) in h-coordinates.
  std::vector<Rational> coroot_coordinates(const roots::Root& beta) const;

 private:
  friend MatrixLieAlgebra realize(const roots::RootSystem& rs);
  explicit MatrixLieAlgebra(const roots::RootSystem& rs);

  BasisCombination decompose(const Matrix& x, const roots::Coords& weight) const;

  roots::RootSystem rs_;
  std::size_t n_ = 0;
  std::size_t num_pos_ = 0;
  Matrix form_;
  bool trace_form_ = false;
  std::vector<Matrix> basis_;
};

/// Throws UnsupportedError for types E, F, G. The result satisfies
/// [h_i, e_j] = a_ij e_j, [h_i, f_j] = -a_ij f_j, [e_i, f_j] = δ_ij h_i
/// (checked at construction).
MatrixLieAlgebra realize(const roots::RootSystem& rs);

}  // namespace locan::lie
