#include "narydiff/sampling.hpp"

#include <algorithm>

namespace narydiff {

RationalSampler::RationalSampler(std::uint64_t seed, long numerator_bound, long denominator_bound)
    : engine_(seed), numerator_bound_(numerator_bound), denominator_bound_(denominator_bound) {}

long RationalSampler::next_integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

std::size_t RationalSampler::next_index(std::size_t size) {
  return std::uniform_int_distribution<std::size_t>(0, size - 1)(engine_);
}

Rational RationalSampler::next() {
  long num = next_integer(-numerator_bound_, numerator_bound_);
  long den = next_integer(1, denominator_bound_);
  return Rational(mpz_class(num), mpz_class(den));
}

PointList<Rational> RationalSampler::points(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return PointList<Rational>(std::move(out));
}

PointList<Rational> RationalSampler::distinct_points(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  while (out.size() < n) {
    auto r = next();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return PointList<Rational>(std::move(out));
}

PointList<Rational> RationalSampler::points_with_duplicate(std::size_t n) {
  auto base = points(n);
  if (n < 2) return base;
  std::size_t from = next_index(n);
  std::size_t to = next_index(n - 1);
  if (to >= from) ++to;
  return base.with_replaced(to, base[from]);
}

PointList<Rational> RationalSampler::integer_points(std::size_t n, long bound) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(next_integer(-bound, bound));
  return PointList<Rational>(std::move(out));
}

}  // namespace narydiff
