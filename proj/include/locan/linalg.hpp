#pragma once

#include "locan/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace locan::linalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q. Sized for desk-scale problems.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const Vector& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> reduce_to_rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : A x = 0}. One vector per free column, with that column set
/// to 1 and the other free columns 0; vectors are ordered by free column.
std::vector<Vector> nullspace(RationalMatrix a);

/// Some solution of A x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const RationalMatrix& a, const Vector& b);

}  // namespace locan::linalg
