#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace narydiff {

/// Exact rational number backed by GMP.
///
/// Always held in canonical form: the denominator is positive and shares no
/// factor with the numerator, so `==` compares values.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator);

  /// Accepts `n`, `p/q` and finite decimals such as `-0.25`. Decimals are
  /// converted exactly. Throws ParseError or DivisionByZero.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// `p/q`, or just `p` when the denominator is one.
  std::string to_string() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;

  friend Rational abs(const Rational& r);
  friend Rational pow(const Rational& base, unsigned long exponent);
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace narydiff
