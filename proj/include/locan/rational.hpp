#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace locan {

using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (b != 0) into a canonical rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. mpq_class(num, den) leaves the fraction
/// unreduced, which breaks integer tests. Throws DomainError for den = 0.
Rational make_rational(long num, long den);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
bool is_positive_integer(const Rational& q);
bool is_nonnegative_integer(const Rational& q);

/// Rational number or a transcendental shift of one.
///
/// A generic scalar stands for `value + t` with `t` transcendental over Q.
/// Every generic token introduced by the user is its own independent
/// transcendental, so any linear combination with a nonzero coefficient on a
/// generic term is again generic and in particular never an integer.
struct Scalar {
  Rational value;
  bool generic = false;

  Scalar() = default;
  Scalar(Rational v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : value(v) {}                  // NOLINT(google-explicit-constructor)

  static Scalar make_generic(Rational shift = 0) {
    Scalar s(std::move(shift));
    s.generic = true;
    return s;
  }

  bool is_integer() const { return !generic && locan::is_integer(value); }
  bool is_positive_integer() const { return !generic && locan::is_positive_integer(value); }
  bool is_nonnegative_integer() const { return !generic && locan::is_nonnegative_integer(value); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Rational& c, const Scalar& s);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.generic == b.generic && a.value == b.value;
  }
};

std::string to_string(const Scalar& s);

/// Element of Q ∪ {+∞}; used for valuations and norm exponents.
class ExtRational {
 public:
  ExtRational() : infinite_(true) {}
  ExtRational(Rational v) : value_(std::move(v)), infinite_(false) {}  // NOLINT
  ExtRational(long v) : value_(v), infinite_(false) {}                  // NOLINT

  static ExtRational infinity() { return ExtRational(); }

  bool is_infinite() const { return infinite_; }
  /// Precondition: finite.
  const Rational& value() const { return value_; }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  Rational value_;
  bool infinite_;
};

ExtRational min(const ExtRational& a, const ExtRational& b);
std::string to_string(const ExtRational& x);

}  // namespace locan
