#include "locan/rational.hpp"

#include "locan/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace locan {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, 1);
  q /= den;
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }
bool is_positive_integer(const Rational& q) { return is_integer(q) && q > 0; }
bool is_nonnegative_integer(const Rational& q) { return is_integer(q) && q >= 0; }

Scalar Scalar::operator-() const {
  Scalar s(Rational(-value));
  s.generic = generic;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  value += other.value;
  generic = generic || other.generic;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  value -= other.value;
  generic = generic || other.generic;
  return *this;
}

Scalar operator*(const Rational& c, const Scalar& s) {
  if (c == 0) return Scalar();
  Scalar out(Rational(c * s.value));
  out.generic = s.generic;
  return out;
}

std::string to_string(const Scalar& s) {
  if (!s.generic) return to_string(s.value);
  if (s.value == 0) return "generic";
  return to_string(s.value) + "+generic";
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return ExtRational::infinity();
  return ExtRational(Rational(a.value_ + b.value_));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtRational min(const ExtRational& a, const ExtRational& b) { return (a <=> b) == std::strong_ordering::greater ? b : a; }

std::string to_string(const ExtRational& x) { return x.is_infinite() ? "inf" : to_string(x.value()); }

}  // namespace locan
