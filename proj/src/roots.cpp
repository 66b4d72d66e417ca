#include "locan/roots.hpp"

#include "locan/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace locan::roots {

char type_letter(DynkinType t) { return "ABCDEFG"[static_cast<int>(t)]; }

std::optional<DynkinType> type_from_letter(char c) {
  c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (c < 'A' || c > 'G') return std::nullopt;
  return static_cast<DynkinType>(c - 'A');
}

Root::Root(Coords coords) : coords_(std::move(coords)) {}

bool Root::is_positive() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
}

int Root::height() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

Root Root::operator-() const {
  Coords neg = coords_;
  for (int& c : neg) c = -c;
  return Root(std::move(neg));
}

std::string Root::label() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const int c = coords_[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += 'a' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Weight Weight::from_rationals(const std::vector<Rational>& values) {
  return Weight(std::vector<Scalar>(values.begin(), values.end()));
}

bool Weight::has_generic() const {
  return std::any_of(pairings.begin(), pairings.end(), [](const Scalar& s) { return s.generic; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.size() != size()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < size(); ++i) pairings[i] += other.pairings[i];
  return *this;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += to_string(w.pairings[i]);
  }
  return out + ")";
}

namespace {

struct Edge {
  int i, j;      // 1-based nodes
  int aij, aji;  // Cartan entries
};

std::vector<Edge> dynkin_edges(DynkinType type, int n) {
  std::vector<Edge> edges;
  auto chain = [&](int from, int to) {
    for (int k = from; k < to; ++k) edges.push_back({k, k + 1, -1, -1});
  };
  switch (type) {
    case DynkinType::A:
      chain(1, n);
      break;
    case DynkinType::B:
      chain(1, n - 1);
      edges.push_back({n - 1, n, -1, -2});
      break;
    case DynkinType::C:
      chain(1, n - 1);
      edges.push_back({n - 1, n, -2, -1});
      break;
    case DynkinType::D:
      chain(1, n - 1);
      edges.push_back({n - 2, n, -1, -1});
      break;
    case DynkinType::E:
      edges.push_back({1, 3, -1, -1});
      chain(3, n);
      edges.push_back({2, 4, -1, -1});
      break;
    case DynkinType::F:
      edges.push_back({1, 2, -1, -1});
      edges.push_back({2, 3, -1, -2});
      edges.push_back({3, 4, -1, -1});
      break;
    case DynkinType::G:
      edges.push_back({1, 2, -3, -1});
      break;
  }
  return edges;
}

bool supported(DynkinType type, int n) {
  switch (type) {
    case DynkinType::A: return n >= 1 && n <= 8;
    case DynkinType::B:
    case DynkinType::C: return n >= 2 && n <= 8;
    case DynkinType::D: return n >= 4 && n <= 8;
    case DynkinType::E: return n >= 6 && n <= 8;
    case DynkinType::F: return n == 4;
    case DynkinType::G: return n == 2;
  }
  return false;
}

}  // namespace

RootSystem::RootSystem(DynkinType type, int rank) : type_(type), rank_(rank) {
  if (!supported(type, rank)) {
    throw UnsupportedError(std::string("unsupported root system ") + type_letter(type) + std::to_string(rank));
  }
  cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) cartan_[i][i] = 2;
  const auto edges = dynkin_edges(type, rank);
  for (const auto& e : edges) {
    cartan_[e.i - 1][e.j - 1] = e.aij;
    cartan_[e.j - 1][e.i - 1] = e.aji;
  }

  // d_j = d_i a_ij / a_ji along the (tree-shaped) diagram, then clear denominators.
  std::vector<Rational> d(rank, Rational(0));
  d[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : edges) {
      const int i = e.i - 1, j = e.j - 1;
      if (d[i] != 0 && d[j] == 0) {
        d[j] = d[i] * e.aij / e.aji;
        changed = true;
      } else if (d[j] != 0 && d[i] == 0) {
        d[i] = d[j] * e.aji / e.aij;
        changed = true;
      }
    }
  }
  mpz_class lcm_den = 1;
  for (const auto& q : d) lcm_den = lcm(lcm_den, mpz_class(q.get_den()));
  std::vector<mpz_class> scaled(rank);
  mpz_class g = 0;
  for (int i = 0; i < rank; ++i) {
    Rational s = d[i] * lcm_den;
    scaled[i] = s.get_num();
    g = gcd(g, scaled[i]);
  }
  symmetrizer_.resize(rank);
  for (int i = 0; i < rank; ++i) symmetrizer_[i] = static_cast<int>(mpz_class(scaled[i] / g).get_si());

  // Orbit of the simple roots under the simple reflections.
  std::set<Coords> seen;
  std::vector<Coords> frontier;
  for (int i = 0; i < rank; ++i) {
    Coords c(rank, 0);
    c[i] = 1;
    seen.insert(c);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank; ++i) {
        Coords r = reflect(i, beta);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& c : seen) {
    Root r(c);
    if (r.is_positive()) positive_.push_back(std::move(r));
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords() > b.coords();
  });
}

std::string RootSystem::name() const { return std::string(1, type_label()) + std::to_string(rank_); }

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positive_;
  for (const auto& r : positive_) out.push_back(-r);
  return out;
}

std::optional<std::size_t> RootSystem::positive_index(const Coords& c) const {
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (positive_[k].coords() == c) return k;
  }
  return std::nullopt;
}

bool RootSystem::is_root(const Coords& c) const {
  if (static_cast<int>(c.size()) != rank_) return false;
  if (positive_index(c)) return true;
  Coords neg = c;
  for (int& x : neg) x = -x;
  return positive_index(neg).has_value();
}

Root RootSystem::simple_root(int i) const {
  Coords c(rank_, 0);
  c.at(i) = 1;
  return Root(std::move(c));
}

std::vector<int> RootSystem::simple_pairings(const Coords& beta) const {
  std::vector<int> out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) out[i] += cartan_[i][j] * beta[j];
  }
  return out;
}

Rational RootSystem::inner_product(const Coords& beta, const Coords& gamma) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) s += beta[i] * gamma[j] * symmetrizer_[i] * cartan_[i][j];
  }
  return s;
}

Coords RootSystem::reflect(int i, const Coords& beta) const {
  int pairing = 0;
  for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * beta[j];
  Coords out = beta;
  out[i] -= pairing;
  return out;
}

RootSystem build_root_system(char type_label, int rank) {
  const auto t = type_from_letter(type_label);
  if (!t) throw UnsupportedError(std::string("unknown Dynkin type '") + type_label + "'");
  return RootSystem(*t, rank);
}

RootSystem build_root_system(const std::string& name) {
  if (name.size() < 2) throw UnsupportedError("malformed root system name '" + name + "'");
  const std::string digits = name.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
      digits.size() > 2) {
    throw UnsupportedError("malformed root system name '" + name + "'");
  }
  return build_root_system(name[0], std::stoi(digits));
}

Weight half_sum_positive_roots(const RootSystem& rs) {
  std::vector<Rational> sum(rs.rank(), Rational(0));
  for (const auto& beta : rs.positive_roots()) {
    const auto p = rs.simple_pairings(beta.coords());
    for (int i = 0; i < rs.rank(); ++i) sum[i] += p[i];
  }
  for (auto& s : sum) s /= 2;
  return Weight::from_rationals(sum);
}

Weight weight_of(const RootSystem& rs, const Coords& beta) {
  const auto p = rs.simple_pairings(beta);
  std::vector<Rational> q(p.begin(), p.end());
  return Weight::from_rationals(q);
}

Scalar pair_with_coroot(const RootSystem& rs, const Weight& lambda, const Root& beta) {
  if (static_cast<int>(lambda.size()) != rs.rank()) throw DomainError("weight rank does not match root system");
  if (!rs.is_root(beta.coords())) throw DomainError("not a root of " + rs.name() + ": " + beta.label());
  const Rational d_beta = rs.inner_product(beta.coords(), beta.coords()) / 2;
  Scalar out;
  for (int i = 0; i < rs.rank(); ++i) {
    const Rational k = Rational(beta.coords()[i] * rs.symmetrizer()[i]) / d_beta;
    out += k * lambda.pairings[i];
  }
  return out;
}

}  // namespace locan::roots
