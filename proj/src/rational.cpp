#include "narydiff/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "narydiff/error.hpp"

namespace narydiff {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class to_integer(std::string_view digits) { return mpz_class(std::string(digits), 10); }

[[noreturn]] void malformed(std::string_view text) {
  throw ParseError("malformed rational: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpz_class numerator;
  mpz_class denominator = 1;

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    numerator = to_integer(num);
    denominator = to_integer(den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) malformed(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) malformed(text);
    std::string digits(whole);
    digits += frac;
    numerator = to_integer(digits);
    mpz_ui_pow_ui(denominator.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(body)) malformed(text);
    numerator = to_integer(body);
  }

  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.value_))); }

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.value_.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime, so no canonicalize needed.
  mpq_class out;
  mpq_set_num(out.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(out.get_mpq_t(), den.get_mpz_t());
  return Rational(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace narydiff
