#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include "narydiff/error.hpp"
#include "narydiff/rational.hpp"

namespace narydiff {

enum class Backend { exact, float64 };

/// Backend hooks for the two scalar types every algorithm is instantiated
/// with: Rational (exact) and double (Float64).
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Backend backend = Backend::exact;
  static constexpr const char* name = "exact";

  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational abs(const Rational& x) { return narydiff::abs(x); }
  static std::string to_string(const Rational& x) { return x.to_string(); }
  static double to_double(const Rational& x) { return x.to_double(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr Backend backend = Backend::float64;
  static constexpr const char* name = "float";

  static double from_rational(const Rational& r) { return r.to_double(); }
  static bool is_zero(double x) { return x == 0.0; }
  static double abs(double x) { return std::fabs(x); }
  static std::string to_string(double x);
  static double to_double(double x) { return x; }
};

template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { ScalarTraits<T>::backend } -> std::convertible_to<Backend>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

/// Checked Float64 construction; the float backend never accepts NaN or Inf
/// as an input.
double make_float64(double value);

/// Parses any Rational text form into the requested backend.
template <Scalar T>
T parse_scalar(std::string_view text) {
  auto exact = Rational::parse(text);
  if constexpr (std::same_as<T, Rational>) {
    return exact;
  } else {
    return make_float64(exact.to_double());
  }
}

/// Relative tolerance used wherever the float backend checks an identity.
inline constexpr double kFloatRelativeTolerance = 1e-9;

/// Identity comparison: exact equality for Rational; for double, agreement
/// within kFloatRelativeTolerance of the largest of |a|, |b| and `scale`.
/// `scale` carries the magnitude of intermediate terms that may cancel.
inline bool scalars_agree(const Rational& a, const Rational& b, const Rational& /*scale*/ = Rational()) {
  return a == b;
}

inline bool scalars_agree(double a, double b, double scale = 0.0) {
  if (a == b) return true;
  double bound = std::max({std::fabs(a), std::fabs(b), std::fabs(scale)});
  return std::fabs(a - b) <= kFloatRelativeTolerance * bound;
}

}  // namespace narydiff
