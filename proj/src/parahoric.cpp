#include "locan/parahoric.hpp"

#include "locan/errors.hpp"

#include <algorithm>
#include <deque>

namespace locan::parahoric {

using roots::Coords;
using roots::Root;
using roots::RootSystem;

WeylElement::WeylElement(IntMatrix matrix, std::vector<int> word) : matrix_(std::move(matrix)), word_(std::move(word)) {}

Coords WeylElement::apply(const Coords& beta) const {
  Coords out(beta.size(), 0);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    for (std::size_t j = 0; j < beta.size(); ++j) out[i] += matrix_[i][j] * beta[j];
  }
  return out;
}

std::string WeylElement::label() const {
  if (word_.empty()) return "e";
  std::string out;
  for (int i : word_) out += "s" + std::to_string(i + 1);
  return out;
}

IntMatrix identity_matrix(int rank) {
  IntMatrix m(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

IntMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
  IntMatrix m = identity_matrix(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) m[i][j] -= rs.cartan_matrix()[i][j];
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

namespace {

Coords column(const IntMatrix& m, int j) {
  Coords c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
  return c;
}

bool negative(const Coords& c) {
  return std::any_of(c.begin(), c.end(), [](int x) { return x < 0; });
}

Coords apply_matrix(const IntMatrix& m, const Coords& beta) {
  Coords out(beta.size(), 0);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    for (std::size_t j = 0; j < beta.size(); ++j) out[i] += m[i][j] * beta[j];
  }
  return out;
}

}  // namespace

std::size_t inversion_count(const RootSystem& rs, const IntMatrix& w) {
  std::size_t count = 0;
  for (const auto& alpha : rs.positive_roots()) {
    if (negative(apply_matrix(w, alpha.coords()))) ++count;
  }
  return count;
}

std::vector<int> reduced_word(const RootSystem& rs, const IntMatrix& w) {
  std::vector<int> reversed;
  IntMatrix cur = w;
  const IntMatrix id = identity_matrix(rs.rank());
  while (cur != id) {
    int descent = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (negative(column(cur, i))) {
        descent = i;
        break;
      }
    }
    if (descent < 0) throw std::logic_error("matrix is not a Weyl group element");
    reversed.push_back(descent);
    cur = multiply(cur, simple_reflection_matrix(rs, descent));
  }
  return {reversed.rbegin(), reversed.rend()};
}

WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  IntMatrix m = identity_matrix(rs.rank());
  for (int i : word) {
    if (i < 0 || i >= rs.rank()) throw DomainError("simple reflection index out of range");
    m = multiply(m, simple_reflection_matrix(rs, i));
  }
  auto reduced = reduced_word(rs, m);
  return WeylElement(std::move(m), std::move(reduced));
}

std::size_t WeylGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw DomainError("matrix is not an element of this Weyl group");
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(parahoric::multiply(elements_.at(a).matrix(), elements_.at(b).matrix()));
}

std::size_t WeylGroup::inverse(std::size_t a) const {
  IntMatrix m = identity_matrix(rs_.rank());
  const auto& word = elements_.at(a).word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = parahoric::multiply(m, simple_reflection_matrix(rs_, *it));
  return index_of(m);
}

std::size_t WeylGroup::longest_element() const {
  std::size_t best = 0;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k].length() > elements_[best].length()) best = k;
  }
  return best;
}

WeylGroup build_weyl_group(const RootSystem& rs, std::size_t cap) {
  WeylGroup w(rs);
  std::vector<IntMatrix> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection_matrix(rs, i));
  std::deque<IntMatrix> queue{identity_matrix(rs.rank())};
  w.index_.emplace(queue.front(), 0);
  w.elements_.emplace_back(queue.front(), std::vector<int>{});
  while (!queue.empty()) {
    const IntMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      IntMatrix next = multiply(cur, s);
      if (w.index_.count(next)) continue;
      if (w.elements_.size() >= cap) {
        throw ResourceError("Weyl group of " + rs.name() + " exceeds the cap of " + std::to_string(cap) + " elements");
      }
      w.index_.emplace(next, w.elements_.size());
      w.elements_.emplace_back(next, reduced_word(rs, next));
      queue.push_back(std::move(next));
    }
  }
  return w;
}

std::vector<std::size_t> parabolic_elements(const WeylGroup& w, const ParabolicType& type) {
  const auto& rs = w.root_system();
  for (int i : type) {
    if (i < 0 || i >= rs.rank()) throw DomainError("parabolic index out of range");
  }
  std::vector<std::size_t> out{w.identity_index()};
  std::set<std::size_t> seen{w.identity_index()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i : type) {
      const std::size_t s = w.index_of(simple_reflection_matrix(rs, i));
      const std::size_t next = w.multiply(out[head], s);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  return out;
}

DoubleCosetDecomposition double_cosets(const WeylGroup& w, const ParabolicType& left, const ParabolicType& right) {
  const auto wi = parabolic_elements(w, left);
  const auto wj = parabolic_elements(w, right);

  std::vector<std::size_t> order(w.order());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = w.element(a);
    const auto& eb = w.element(b);
    if (ea.length() != eb.length()) return ea.length() < eb.length();
    return ea.word() < eb.word();
  });

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  DoubleCosetDecomposition out;
  out.coset_of.assign(w.order(), unassigned);
  for (std::size_t x : order) {
    if (out.coset_of[x] != unassigned) continue;
    const std::size_t c = out.representatives.size();
    out.representatives.push_back(x);
    std::set<std::size_t> orbit;
    for (std::size_t u : wi) {
      const std::size_t ux = w.multiply(u, x);
      for (std::size_t v : wj) orbit.insert(w.multiply(ux, v));
    }
    for (std::size_t y : orbit) out.coset_of[y] = c;
    out.members.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<Root> reduced_roots(const RootSystem& rs) { return rs.all_roots(); }

bool in_parabolic_span(const Root& alpha, const ParabolicType& type) {
  const auto& c = alpha.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0 && !type.count(static_cast<int>(i))) return false;
  }
  return true;
}

RootPartition iwahori_root_partition(const RootSystem& rs, const ParabolicType& type, const WeylElement& w) {
  for (int i : type) {
    if (i < 0 || i >= rs.rank()) throw DomainError("parabolic index out of range");
  }
  // w^{-1} from the reversed reduced word.
  IntMatrix inv = identity_matrix(rs.rank());
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) inv = multiply(inv, simple_reflection_matrix(rs, *it));
  if (multiply(inv, w.matrix()) != identity_matrix(rs.rank())) throw DomainError("word does not match matrix");

  RootPartition out;
  for (const auto& alpha : reduced_roots(rs)) {
    if (in_parabolic_span(alpha, type)) continue;
    const Root image(apply_matrix(inv, alpha.coords()));
    (image.is_positive() ? out.roots_plus : out.roots_minus).push_back(alpha);
  }
  return out;
}

}  // namespace locan::parahoric
