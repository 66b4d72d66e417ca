#include "locan/padic.hpp"

#include "locan/errors.hpp"

#include <algorithm>
#include <numeric>

namespace locan::padic {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

int epsilon(long p) { return p == 2 ? 1 : 0; }

namespace {

void require_prime(long p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not a prime");
}

long integer_valuation(mpz_class n, long p) {
  long v = 0;
  const mpz_class pp = p;
  while (n % pp == 0) {
    n /= pp;
    ++v;
  }
  return v;
}

}  // namespace

ExtRational valuation(const Rational& q, long p) {
  require_prime(p);
  if (sgn(q) == 0) return ExtRational::infinity();
  return ExtRational(Rational(integer_valuation(q.get_num(), p) - integer_valuation(q.get_den(), p)));
}

PValuationSpec::PValuationSpec(long p, std::vector<Rational> omega) : p_(p), omega_(std::move(omega)) {
  require_prime(p);
  if (omega_.empty()) throw DomainError("p-valuation needs dimension d >= 1");
  const Rational lower(1, p - 1);
  for (const auto& w : omega_) {
    if (w <= lower) throw DomainError("omega(h_i) = " + to_string(w) + " must exceed 1/(p-1)");
  }
}

ExtRational p_valuation_of_word(const PValuationSpec& spec, const std::vector<Rational>& a) {
  if (static_cast<int>(a.size()) != spec.d()) throw DomainError("word length does not match the p-basis");
  ExtRational best = ExtRational::infinity();
  for (int i = 0; i < spec.d(); ++i) {
    const ExtRational v = valuation(a[i], spec.p());
    if (!v.is_infinite() && v.value() < 0) throw DomainError("coordinate " + to_string(a[i]) + " is not a p-adic integer");
    best = min(best, ExtRational(spec.omega()[i]) + v);
  }
  return best;
}

bool in_lower_p_series(long p, const std::vector<Rational>& h, int i) {
  // P_i(H) = p^{i-1} · p^{1+ε} Z_p^d = p^{i+ε} Z_p^d
  const long needed = i + epsilon(p);
  for (const auto& x : h) {
    const ExtRational v = valuation(x, p);
    if (!v.is_infinite() && v.value() < needed) return false;
  }
  return true;
}

ExtRational canonical_valuation(long p, int d, const std::vector<Rational>& h) {
  require_prime(p);
  if (static_cast<int>(h.size()) != d) throw DomainError("element has the wrong dimension");
  if (!in_lower_p_series(p, h, 1)) throw DomainError("element lies outside the model group p^{1+eps} Z_p^d");
  if (std::all_of(h.begin(), h.end(), [](const Rational& x) { return sgn(x) == 0; })) return ExtRational::infinity();
  int i = 1;
  while (in_lower_p_series(p, h, i + 1)) ++i;
  return ExtRational(Rational(epsilon(p) + i));
}

mpz_class binomial(long x, long n) {
  if (n < 0 || x < n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(n));
  return out;
}

mpz_class binomial(const MultiIndex& x, const MultiIndex& n) {
  mpz_class out = 1;
  for (std::size_t i = 0; i < x.size(); ++i) out *= binomial(x[i], n[i]);
  return out;
}

MahlerSeries mahler_coefficients(long p, const FunctionTable& f) {
  require_prime(p);
  if (f.d < 1 || f.grid < 0) throw DomainError("function table needs d >= 1 and D >= 0");
  const std::size_t side = static_cast<std::size_t>(f.grid) + 1;
  std::size_t total = 1;
  for (int i = 0; i < f.d; ++i) total *= side;
  if (f.values.size() != total) {
    throw DomainError("incomplete function table: expected " + std::to_string(total) + " values, got " +
                      std::to_string(f.values.size()));
  }

  std::vector<Rational> a = f.values;
  std::size_t stride = 1;
  for (int axis = f.d - 1; axis >= 0; --axis) {
    // Forward differences along this axis for every line.
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % side != 0) continue;
      for (std::size_t level = 1; level < side; ++level) {
        for (std::size_t n = side - 1; n >= level; --n) {
          a[base + n * stride] -= a[base + (n - 1) * stride];
        }
      }
    }
    stride *= side;
  }

  MahlerSeries s;
  s.p = p;
  s.d = f.d;
  s.degree_bound = f.d * f.grid;
  MultiIndex n(f.d, 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rest = k;
    for (int i = f.d - 1; i >= 0; --i) {
      n[i] = static_cast<int>(rest % side);
      rest /= side;
    }
    if (sgn(a[k]) != 0) s.coefficients.emplace(n, a[k]);
  }
  return s;
}

Rational evaluate(const MahlerSeries& s, const MultiIndex& x) {
  if (static_cast<int>(x.size()) != s.d) throw DomainError("evaluation point has the wrong dimension");
  Rational out = 0;
  for (const auto& [n, c] : s.coefficients) out += c * Rational(binomial(x, n));
  return out;
}

DistSeries::DistSeries(long p, int d, int degree_bound) : p_(p), d_(d), degree_bound_(degree_bound) {
  require_prime(p);
  if (d < 1 || degree_bound < 0) throw DomainError("distribution series needs d >= 1 and a nonnegative bound");
}

DistSeries DistSeries::one(long p, int d, int degree_bound) {
  DistSeries s(p, d, degree_bound);
  s.add_term(MultiIndex(d, 0), 1);
  return s;
}

void DistSeries::add_term(const MultiIndex& n, const Rational& c) {
  if (static_cast<int>(n.size()) != d_) throw DomainError("multi-index has the wrong dimension");
  if (std::any_of(n.begin(), n.end(), [](int x) { return x < 0; })) throw DomainError("negative exponent");
  if (std::accumulate(n.begin(), n.end(), 0) > degree_bound_ || sgn(c) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(n, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) coeffs_.erase(it);
}

RNormParam::RNormParam(Rational t, std::vector<Rational> tau) : t_(std::move(t)), tau_(std::move(tau)) {
  if (t_ <= 0 || t_ >= 1) throw DomainError("r = p^-t needs 0 < t < 1, got t = " + to_string(t_));
  for (const auto& x : tau_) {
    if (x <= 0) throw DomainError("tau weights must be positive");
  }
}

ExtRational r_norm(const DistSeries& s, const RNormParam& param) {
  if (static_cast<int>(param.tau().size()) != s.d()) throw DomainError("tau has the wrong dimension");
  ExtRational best = ExtRational::infinity();
  for (const auto& [n, c] : s.coefficients()) {
    Rational tau_n = 0;
    for (int i = 0; i < s.d(); ++i) tau_n += n[i] * param.tau()[i];
    best = min(best, valuation(c, s.p()) + ExtRational(Rational(param.t() * tau_n)));
  }
  return best;
}

DistSeries dist_multiply(const DistSeries& s, const DistSeries& u) {
  if (s.p() != u.p() || s.d() != u.d()) throw DomainError("series over different (p, d) cannot be multiplied");
  DistSeries out(s.p(), s.d(), std::min(s.degree_bound(), u.degree_bound()));
  MultiIndex n(s.d());
  for (const auto& [a, ca] : s.coefficients()) {
    for (const auto& [b, cb] : u.coefficients()) {
      for (int i = 0; i < s.d(); ++i) n[i] = a[i] + b[i];
      out.add_term(n, ca * cb);
    }
  }
  return out;
}

}  // namespace locan::padic
