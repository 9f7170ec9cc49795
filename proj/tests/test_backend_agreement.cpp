#include <doctest.h>

#include "narydiff/difference.hpp"
#include "narydiff/partial_fractions.hpp"
#include "narydiff/sampling.hpp"

using namespace narydiff;

namespace {

bool close(double got, const Rational& want, double scale = 0.0) {
  return scalars_agree(got, want.to_double(), scale);
}

}  // namespace

TEST_CASE("float and exact backends agree on small integer inputs") {
  RationalSampler sampler(100);
  for (int c = 0; c < 300; ++c) {
    std::size_t n = 2 + sampler.next_index(9);
    auto exact = sampler.integer_points(n, 100);
    auto fl = convert_points<double>(exact);
    auto pivot = Rational(sampler.next_integer(-100, 100));
    CAPTURE(n);

    CHECK(close(difference_nary(fl), difference_nary(exact)));
    CHECK(close(distance_nary(fl), distance_nary(exact)));

    auto d_exact = decompose(exact, pivot);
    auto d_float = decompose(fl, pivot.to_double());
    CHECK(d_float.holds());
    CHECK(close(d_float.total, d_exact.total, d_float.magnitude()));
    for (std::size_t k = 0; k < n; ++k) CHECK(close(d_float.terms[k].value, d_exact.terms[k].value));

    if (n <= 6) {
      auto r = doubled_determinant(fl, pivot.to_double());
      CHECK(close(r.expected, doubled_determinant(exact, pivot).expected));
      CHECK(scalars_agree(r.det_doubled, r.expected, 0.0));
    }
  }
}

TEST_CASE("float partial fractions agree with exact ones") {
  RationalSampler sampler(7, 100, 1);
  for (int c = 0; c < 100; ++c) {
    std::size_t n = 1 + sampler.next_index(6);
    auto roots = sampler.distinct_points(n);
    auto e = expand_reciprocal(roots);
    auto f = expand_reciprocal(convert_points<double>(roots));
    for (std::size_t i = 0; i < n; ++i) CHECK(close(f.terms[i].coefficient, e.terms[i].coefficient));
  }
}
