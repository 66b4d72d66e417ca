#include "locan/verma.hpp"

#include "locan/errors.hpp"
#include "locan/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace locan::verma {

using roots::Coords;
using roots::RootSystem;
using roots::Weight;

PBWVector PBWVector::monomial(Exponent n, Rational c) {
  PBWVector v;
  v.add(n, c);
  return v;
}

Rational PBWVector::coefficient(const Exponent& n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PBWVector::add(const Exponent& n, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

PBWVector& PBWVector::operator+=(const PBWVector& other) {
  for (const auto& [n, c] : other.terms_) add(n, c);
  return *this;
}

PBWVector& PBWVector::operator-=(const PBWVector& other) {
  for (const auto& [n, c] : other.terms_) add(n, Rational(-c));
  return *this;
}

PBWVector& PBWVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, coef] : terms_) coef *= c;
  return *this;
}

LoweringData::LoweringData(lie::MatrixLieAlgebra algebra) : algebra_(std::move(algebra)) {
  const std::size_t np = algebra_.num_positive();
  const std::size_t dim = algebra_.algebra_dimension();
  table_.resize(dim * np);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t k = 0; k < np; ++k) {
      table_[a * np + k] = algebra_.bracket_in_basis(a, algebra_.negative_id(k));
    }
  }
  for (const auto& beta : pbw_order()) pairings_.push_back(root_system().simple_pairings(beta.coords()));
}

std::shared_ptr<const LoweringData> make_lowering_data(const RootSystem& rs) {
  return std::make_shared<const LoweringData>(lie::realize(rs));
}

namespace {

std::vector<Rational> rational_weight(const Weight& w) {
  std::vector<Rational> out;
  for (const auto& s : w.pairings) {
    if (s.generic) throw UnsupportedError("Verma module computations need a rational weight; got " + to_string(w));
    out.push_back(s.value);
  }
  return out;
}

}  // namespace

VermaModule::VermaModule(std::shared_ptr<const LoweringData> data, const Weight& lambda)
    : data_(std::move(data)), lambda_(rational_weight(lambda)) {
  if (static_cast<int>(lambda_.size()) != data_->root_system().rank()) {
    throw DomainError("weight rank does not match root system");
  }
}

VermaModule::VermaModule(const RootSystem& rs, const Weight& lambda) : VermaModule(make_lowering_data(rs), lambda) {}

PBWVector VermaModule::highest_weight_vector() const {
  return PBWVector::monomial(Exponent(pbw_order().size(), 0));
}

Coords VermaModule::depth(const Exponent& n) const {
  Coords nu(root_system().rank(), 0);
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] == 0) continue;
    const auto& beta = pbw_order()[k].coords();
    for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += n[k] * beta[i];
  }
  return nu;
}

std::optional<Coords> VermaModule::homogeneous_depth(const PBWVector& v) const {
  std::optional<Coords> out;
  for (const auto& [n, c] : v.terms()) {
    Coords d = depth(n);
    if (out && *out != d) return std::nullopt;
    out = std::move(d);
  }
  return out;
}

std::vector<Rational> VermaModule::weight_at_depth(const Coords& nu) const {
  const auto p = root_system().simple_pairings(nu);
  std::vector<Rational> out = lambda_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= p[i];
  return out;
}

/// Normal-ordering engine: rewrites x · f^n ⊗ v_λ into the PBW basis by
/// commuting x to the right, one lowering factor at a time, with memoized
/// partial results.
class Rewriter {
 public:
  explicit Rewriter(const VermaModule& m) : m_(m), data_(m.data()), alg_(data_.algebra()) {}

  PBWVector apply(std::size_t a, const PBWVector& v) {
    PBWVector out;
    for (const auto& [n, c] : v.terms()) {
      PBWVector t = apply(a, n);
      t *= c;
      out += t;
    }
    return out;
  }

  PBWVector apply(std::size_t a, const Exponent& n) {
    const std::size_t np = alg_.num_positive();
    if (a >= 2 * np) return cartan(a - 2 * np, n);

    std::size_t first = 0;
    while (first < n.size() && n[first] == 0) ++first;
    if (a >= np) {
      const std::size_t k = a - np;
      if (k <= first) {
        Exponent out = n;
        out[k] += 1;
        return PBWVector::monomial(std::move(out));
      }
    } else if (first == n.size()) {
      return PBWVector();  // raising operators kill v_λ
    }

    const auto key = std::make_pair(a, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // x · y R = y · (x · R) + [x, y] · R   with y = f_{β_first}
    Exponent rest = n;
    rest[first] -= 1;
    PBWVector result = apply(alg_.negative_id(first), apply(a, rest));
    for (const auto& [b, c] : data_.bracket_with_lowering(a, first)) {
      PBWVector t = apply(b, rest);
      t *= c;
      result += t;
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  PBWVector cartan(std::size_t i, const Exponent& n) const {
    Rational c = m_.highest_weight()[i];
    for (std::size_t k = 0; k < n.size(); ++k) c -= n[k] * data_.root_pairing(k, static_cast<int>(i));
    return PBWVector::monomial(n, c);
  }

  const VermaModule& m_;
  const LoweringData& data_;
  const lie::MatrixLieAlgebra& alg_;
  std::map<std::pair<std::size_t, Exponent>, PBWVector> memo_;
};

namespace {

std::size_t generator_id(const VermaModule& m, const Generator& g) {
  const auto& rs = m.root_system();
  if (g.index < 0 || g.index >= rs.rank()) throw DomainError("generator index out of range");
  const auto& alg = m.data().algebra();
  const std::size_t k = *rs.positive_index(rs.simple_root(g.index).coords());
  switch (g.kind) {
    case GeneratorKind::E: return alg.positive_id(k);
    case GeneratorKind::F: return alg.negative_id(k);
    case GeneratorKind::H: return alg.cartan_id(g.index);
  }
  return 0;
}

}  // namespace

PBWVector VermaModule::act(const Generator& g, const PBWVector& v) const {
  const std::size_t id = generator_id(*this, g);
  if (v.is_zero()) return PBWVector();
  if (!homogeneous_depth(v)) throw DomainError("act: vector is not homogeneous");
  Rewriter rw(*this);
  return rw.apply(id, v);
}

std::string VermaModule::monomial_label(const Exponent& n) const {
  std::string out;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += "f(" + pbw_order()[k].label() + ")";
    if (n[k] > 1) out += "^" + std::to_string(n[k]);
  }
  return out.empty() ? "1" : out;
}

std::string VermaModule::format(const PBWVector& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [n, c] : v.terms()) {
    std::string coef = to_string(c);
    if (out.empty()) {
      out += coef;
    } else if (sgn(c) < 0) {
      out += " - " + to_string(Rational(-c));
    } else {
      out += " + " + coef;
    }
    out += " " + monomial_label(n) + "*v";
  }
  return out;
}

namespace {

void enumerate_partitions(const std::vector<roots::Root>& order, std::size_t k, Coords& remaining, Exponent& current,
                          std::vector<Exponent>& out) {
  if (k == order.size()) {
    if (std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; })) out.push_back(current);
    return;
  }
  const auto& beta = order[k].coords();
  int max_mult = 0;
  bool any = false;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    const int q = remaining[i] / beta[i];
    max_mult = any ? std::min(max_mult, q) : q;
    any = true;
  }
  for (int m = 0; m <= max_mult; ++m) {
    current[k] = m;
    enumerate_partitions(order, k + 1, remaining, current, out);
    for (std::size_t i = 0; i < beta.size(); ++i) remaining[i] -= beta[i];
  }
  for (std::size_t i = 0; i < beta.size(); ++i) remaining[i] += (max_mult + 1) * beta[i];
  current[k] = 0;
}

bool is_nonnegative(const Coords& nu) {
  return std::all_of(nu.begin(), nu.end(), [](int c) { return c >= 0; });
}

}  // namespace

std::vector<Exponent> weight_space_basis(const VermaModule& m, const Coords& nu) {
  std::vector<Exponent> out;
  if (static_cast<int>(nu.size()) != m.root_system().rank() || !is_nonnegative(nu)) return out;
  Coords remaining = nu;
  Exponent current(m.pbw_order().size(), 0);
  enumerate_partitions(m.pbw_order(), 0, remaining, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Coords> depth_of_weight(const VermaModule& m, const Weight& mu) {
  const auto& rs = m.root_system();
  const int r = rs.rank();
  if (static_cast<int>(mu.size()) != r || mu.has_generic()) return std::nullopt;
  linalg::RationalMatrix a(r, r);
  linalg::Vector rhs(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a(i, j) = rs.cartan_matrix()[i][j];
    rhs[i] = m.highest_weight()[i] - mu.pairings[i].value;
  }
  const auto x = linalg::solve(a, rhs);  // Cartan matrices are invertible
  if (!x) return std::nullopt;
  Coords nu(r);
  for (int i = 0; i < r; ++i) {
    if (!is_integer((*x)[i])) return std::nullopt;
    nu[i] = static_cast<int>((*x)[i].get_num().get_si());
  }
  return nu;
}

std::vector<Exponent> weight_space_basis(const VermaModule& m, const Weight& mu) {
  const auto nu = depth_of_weight(m, mu);
  if (!nu) return {};
  return weight_space_basis(m, *nu);
}

SingularSpace singular_vectors(const VermaModule& m, const Coords& nu) {
  const int r = m.root_system().rank();
  if (static_cast<int>(nu.size()) != r || !is_nonnegative(nu) ||
      std::all_of(nu.begin(), nu.end(), [](int c) { return c == 0; })) {
    throw DomainError("singular_vectors: weight must lie strictly below the highest weight");
  }
  SingularSpace out{nu, {}};
  const auto source = weight_space_basis(m, nu);

  Rewriter rw(m);
  const auto& alg = m.data().algebra();
  linalg::RationalMatrix system(0, source.size());
  for (int i = 0; i < r; ++i) {
    Coords target_depth = nu;
    target_depth[i] -= 1;
    if (target_depth[i] < 0) continue;  // e_i lands above λ: automatically zero
    const auto target = weight_space_basis(m, target_depth);
    if (target.empty()) continue;
    std::map<Exponent, std::size_t> row_of;
    for (std::size_t t = 0; t < target.size(); ++t) row_of.emplace(target[t], t);
    const std::size_t e_id = alg.positive_id(*m.root_system().positive_index(m.root_system().simple_root(i).coords()));
    std::vector<linalg::Vector> rows(target.size(), linalg::Vector(source.size(), Rational(0)));
    for (std::size_t j = 0; j < source.size(); ++j) {
      const PBWVector image = rw.apply(e_id, source[j]);
      for (const auto& [n, c] : image.terms()) rows.at(row_of.at(n))[j] = c;
    }
    for (const auto& row : rows) system.append_row(row);
  }
  std::vector<linalg::Vector> kernel;
  if (system.rows() == 0) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      linalg::Vector v(source.size(), Rational(0));
      v[j] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = linalg::nullspace(system);
  }
  for (const auto& x : kernel) {
    PBWVector v;
    for (std::size_t j = 0; j < source.size(); ++j) v.add(source[j], x[j]);
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::vector<Coords> depths_of_height(int rank, int height) {
  std::vector<Coords> out;
  Coords c(rank, 0);
  // Compositions of `height` into `rank` nonnegative parts, descending lex.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == rank - 1) {
      c[i] = left;
      out.push_back(c);
      return;
    }
    for (int v = left; v >= 0; --v) {
      c[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (rank > 0) rec(rec, 0, height);
  return out;
}

OracleResult simplicity_oracle(const VermaModule& m, int bound, int cap) {
  if (bound < 1) throw DomainError("oracle degree bound must be at least 1");
  if (bound > cap) {
    throw ResourceError("oracle degree bound " + std::to_string(bound) + " exceeds the safety cap " +
                        std::to_string(cap));
  }
  OracleResult result;
  result.bound = bound;
  for (int ht = 1; ht <= bound; ++ht) {
    for (const auto& nu : depths_of_height(m.root_system().rank(), ht)) {
      auto space = singular_vectors(m, nu);
      if (!space.basis.empty()) result.found.push_back(std::move(space));
    }
  }
  return result;
}

}  // namespace locan::verma
