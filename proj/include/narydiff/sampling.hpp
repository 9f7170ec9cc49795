#pragma once

#include <cstdint>
#include <random>

#include "narydiff/rational.hpp"
#include "narydiff/vandermonde.hpp"

namespace narydiff {

/// Deterministic source of random rationals and point lists. Numerators are
/// drawn from [-numerator_bound, numerator_bound] and denominators from
/// [1, denominator_bound].
class RationalSampler {
 public:
  static constexpr long kDefaultNumeratorBound = 1'000'000;
  static constexpr long kDefaultDenominatorBound = 1'000;

  explicit RationalSampler(std::uint64_t seed, long numerator_bound = kDefaultNumeratorBound,
                           long denominator_bound = kDefaultDenominatorBound);

  Rational next();
  long next_integer(long lo, long hi);
  std::size_t next_index(std::size_t size);

  PointList<Rational> points(std::size_t n);
  /// Pairwise distinct values.
  PointList<Rational> distinct_points(std::size_t n);
  /// n >= 2 points with at least one value repeated at two random slots.
  PointList<Rational> points_with_duplicate(std::size_t n);
  /// Integers in [-bound, bound].
  PointList<Rational> integer_points(std::size_t n, long bound);

 private:
  std::mt19937_64 engine_;
  long numerator_bound_;
  long denominator_bound_;
};

template <Scalar T>
PointList<T> convert_points(const PointList<Rational>& pts) {
  std::vector<T> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(ScalarTraits<T>::from_rational(p));
  return PointList<T>(std::move(out));
}

}  // namespace narydiff
