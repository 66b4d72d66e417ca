#include "locan/lie.hpp"

#include "locan/errors.hpp"
#include "locan/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace locan::lie {

using roots::Coords;
using roots::DynkinType;
using roots::Root;
using roots::RootSystem;

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n);
  m(i, j) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && sgn((*this)(i, j)) != 0) return false;
    }
  }
  return true;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.n_;
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix bracket(const Matrix& x, const Matrix& y) {
  if (x.size() != y.size()) throw std::invalid_argument("bracket of matrices of different sizes");
  return x * y - y * x;
}

namespace {

std::size_t defining_size(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  switch (rs.type()) {
    case DynkinType::A: return n + 1;
    case DynkinType::B: return 2 * n + 1;
    case DynkinType::C:
    case DynkinType::D: return 2 * n;
    default: break;
  }
  throw UnsupportedError("no matrix realization for exceptional type " + rs.name());
}

/// Scalar s with [d, x] = s·x, for x a nonzero eigenvector of ad(d).
Rational ad_eigenvalue(const Matrix& d, const Matrix& x) {
  const Matrix b = bracket(d, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (sgn(x(i, j)) == 0) continue;
      const Rational s = b(i, j) / x(i, j);
      if (!(b == s * x)) throw std::logic_error("matrix is not an ad-eigenvector");
      return s;
    }
  }
  throw std::logic_error("zero matrix has no eigenvalue");
}

}  // namespace

MatrixLieAlgebra::MatrixLieAlgebra(const RootSystem& rs) : rs_(rs), n_(defining_size(rs)) {
  const int r = rs.rank();
  const std::size_t N = n_;
  auto mirror = [N](std::size_t k) { return N - 1 - k; };

  form_ = Matrix(N);
  trace_form_ = rs.type() == DynkinType::A;
  if (!trace_form_) {
    for (std::size_t k = 0; k < N; ++k) {
      form_(k, mirror(k)) = (rs.type() == DynkinType::C && k >= N / 2) ? -1 : 1;
    }
  }

  // Simple root vectors.
  std::vector<Matrix> e(r);
  for (int i = 0; i < r; ++i) {
    const auto a = static_cast<std::size_t>(i);
    if (rs.type() == DynkinType::A || i < r - 1) {
      e[i] = Matrix::unit(N, a, a + 1);
      if (!trace_form_) e[i] -= Matrix::unit(N, mirror(a + 1), mirror(a));
      continue;
    }
    switch (rs.type()) {
      case DynkinType::B:  // e_n: short root ε_n
        e[i] = Matrix::unit(N, a, a + 1) - Matrix::unit(N, a + 1, a + 2);
        break;
      case DynkinType::C:  // e_n: long root 2ε_n
        e[i] = Matrix::unit(N, a, a + 1);
        break;
      case DynkinType::D:  // e_n: ε_{n-1} + ε_n
        e[i] = Matrix::unit(N, a - 1, mirror(a)) - Matrix::unit(N, a, mirror(a - 1));
        break;
      default:
        break;
    }
  }

  std::vector<Matrix> f(r), h(r);
  for (int i = 0; i < r; ++i) {
    Matrix ft = e[i].transpose();
    Matrix d = bracket(e[i], ft);
    const Rational s = ad_eigenvalue(d, e[i]);
    const Rational scale = Rational(2) / s;
    f[i] = scale * ft;
    h[i] = scale * d;
  }

  const auto& pos = rs.positive_roots();
  num_pos_ = pos.size();
  basis_.assign(2 * num_pos_ + r, Matrix(N));
  for (std::size_t k = 0; k < num_pos_; ++k) {
    const Coords& beta = pos[k].coords();
    if (pos[k].height() == 1) {
      int i = 0;
      while (beta[i] == 0) ++i;
      basis_[k] = e[i];
      basis_[num_pos_ + k] = f[i];
      continue;
    }
    // X_β = [e_i, X_{β-α_i}] for the first i with β-α_i a positive root; height order
    // guarantees X_{β-α_i} was built already.
    bool built = false;
    for (int i = 0; i < r && !built; ++i) {
      Coords rest = beta;
      rest[i] -= 1;
      const auto idx = rs.positive_index(rest);
      if (!idx) continue;
      basis_[k] = bracket(e[i], basis_[*idx]);
      basis_[num_pos_ + k] = bracket(f[i], basis_[num_pos_ + *idx]);
      built = true;
    }
    if (!built || basis_[k].is_zero() || basis_[num_pos_ + k].is_zero()) {
      throw std::logic_error("failed to build root vector for " + pos[k].label());
    }
  }
  for (int i = 0; i < r; ++i) basis_[cartan_id(i)] = h[i];

  // Chevalley relations and membership.
  const auto& a = rs.cartan_matrix();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const bool ok = bracket(h[i], e[j]) == Rational(a[i][j]) * e[j] &&
                      bracket(h[i], f[j]) == Rational(-a[i][j]) * f[j] &&
                      bracket(e[i], f[j]) == (i == j ? h[i] : Matrix(N));
      if (!ok) throw std::logic_error("Chevalley relations fail in realization of " + rs.name());
    }
  }
  for (const auto& x : basis_) {
    if (!contains(x)) throw std::logic_error("basis matrix outside the realized algebra");
  }
}

MatrixLieAlgebra realize(const RootSystem& rs) { return MatrixLieAlgebra(rs); }

const Matrix& MatrixLieAlgebra::root_vector(const Root& beta) const {
  if (beta.is_positive()) {
    if (auto k = rs_.positive_index(beta.coords())) return basis_[*k];
  } else if (auto k = rs_.positive_index((-beta).coords())) {
    return basis_[num_pos_ + *k];
  }
  throw DomainError("not a root of " + rs_.name() + ": " + beta.label());
}

Coords MatrixLieAlgebra::basis_weight(std::size_t id) const {
  if (id < num_pos_) return rs_.positive_roots()[id].coords();
  if (id < 2 * num_pos_) return (-rs_.positive_roots()[id - num_pos_]).coords();
  return Coords(rs_.rank(), 0);
}

bool MatrixLieAlgebra::contains(const Matrix& x) const {
  if (x.size() != n_) return false;
  if (trace_form_) return x.trace() == 0;
  return (x.transpose() * form_ + form_ * x).is_zero();
}

std::vector<Rational> MatrixLieAlgebra::cartan_coordinates(const Matrix& diag) const {
  if (!diag.is_diagonal()) throw std::logic_error("Cartan element must be diagonal");
  const int r = rs_.rank();
  linalg::RationalMatrix sys(n_, r);
  linalg::Vector rhs(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    for (int i = 0; i < r; ++i) sys(k, i) = basis_[cartan_id(i)](k, k);
    rhs[k] = diag(k, k);
  }
  auto x = linalg::solve(sys, rhs);
  if (!x) throw std::logic_error("diagonal matrix outside the Cartan subalgebra");
  return *x;
}

BasisCombination MatrixLieAlgebra::decompose(const Matrix& x, const Coords& weight) const {
  BasisCombination out;
  if (x.is_zero()) return out;
  const bool zero_weight = std::all_of(weight.begin(), weight.end(), [](int c) { return c == 0; });
  if (zero_weight) {
    const auto c = cartan_coordinates(x);
    for (int i = 0; i < rs_.rank(); ++i) {
      if (c[i] != 0) out.emplace_back(cartan_id(i), c[i]);
    }
    return out;
  }
  if (!rs_.is_root(weight)) throw std::logic_error("nonzero bracket of non-root weight");
  const Root beta(weight);
  const std::size_t id = beta.is_positive() ? *rs_.positive_index(weight)
                                            : num_pos_ + *rs_.positive_index((-beta).coords());
  const Matrix& xb = basis_[id];
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (sgn(xb(i, j)) == 0) continue;
      const Rational c = x(i, j) / xb(i, j);
      if (!(x == c * xb)) throw std::logic_error("bracket is not a multiple of the root vector");
      out.emplace_back(id, c);
      return out;
    }
  }
  return out;
}

BasisCombination MatrixLieAlgebra::bracket_in_basis(std::size_t a, std::size_t b) const {
  Coords w = basis_weight(a);
  const Coords wb = basis_weight(b);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
  return decompose(bracket(basis_.at(a), basis_.at(b)), w);
}

std::vector<Rational> MatrixLieAlgebra::coroot_coordinates(const Root& beta) const {
  const Matrix m = bracket(root_vector(beta), root_vector(-beta));
  const Rational s = ad_eigenvalue(m, root_vector(beta));
  return cartan_coordinates(Rational(Rational(2) / s) * m);
}

}  // namespace locan::lie
