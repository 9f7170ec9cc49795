#include <doctest.h>

#include "narydiff/difference.hpp"
#include "narydiff/partial_fractions.hpp"
#include "narydiff/sampling.hpp"
#include "oracles.hpp"

using namespace narydiff;

namespace {

PointList<Rational> pts(std::initializer_list<long> values) {
  return PointList<Rational>(std::vector<Rational>(values.begin(), values.end()));
}

std::vector<Rational> coefficients(const PartialFractionExpansion<Rational>& e) {
  std::vector<Rational> out;
  for (const auto& t : e.terms) out.push_back(t.coefficient);
  return out;
}

Rational q(const char* t) { return Rational::parse(t); }

}  // namespace

TEST_CASE("dense polynomial basics") {
  DensePolynomial<Rational> p(std::vector<Rational>{1, 0, 3, 0, 0});
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == Rational(13));
  CHECK(p.derivative() == DensePolynomial<Rational>(std::vector<Rational>{0, 6}));
  CHECK(DensePolynomial<Rational>().degree() == -1);
  CHECK(DensePolynomial<Rational>().is_constant(Rational(0)));
  CHECK(DensePolynomial<Rational>::constant(Rational(1)).is_constant(Rational(1)));
  CHECK_FALSE(p.is_constant(Rational(1)));
}

TEST_CASE("coefficients_from_roots examples") {
  using Coeffs = std::vector<Rational>;
  CHECK(coefficients_from_roots(pts({1, 2})).monic.coefficients() == Coeffs{2, -3, 1});
  CHECK(coefficients_from_roots(pts({0, 1, 2})).monic.coefficients() == Coeffs{0, 2, -3, 1});
  auto a = q("-7/3");
  CHECK(coefficients_from_roots(PointList<Rational>({a})).monic.coefficients() == Coeffs{-a, 1});
}

TEST_CASE("coefficients are signed elementary symmetric functions and vanish at roots") {
  RationalSampler sampler(17);
  for (std::size_t n = 1; n <= 8; ++n) {
    auto roots = sampler.points(n);
    auto p = coefficients_from_roots(roots);
    std::vector<Rational> r(roots.begin(), roots.end());
    REQUIRE(p.monic.degree() == static_cast<long>(n));
    for (std::size_t j = 0; j <= n; ++j) {
      Rational e = testing::elementary_symmetric(r, j);
      CHECK(p.monic.coefficient(n - j) == (j % 2 ? -e : e));
    }
    for (const auto& x : roots) CHECK(p.monic(x) == Rational(0));
  }
}

TEST_CASE("expand_reciprocal examples") {
  CHECK(coefficients(expand_reciprocal(pts({0, 1}))) == std::vector<Rational>{-1, 1});
  CHECK(coefficients(expand_reciprocal(pts({0, 1, 2}))) == std::vector<Rational>{q("1/2"), -1, q("1/2")});
  CHECK(coefficients(expand_reciprocal(pts({5}))) == std::vector<Rational>{1});
  CHECK(expand_reciprocal(pts({0, 1, 2})).degree() == 3);
}

TEST_CASE("expand_reciprocal matches cleared-denominator coefficient matching for [0,1]") {
  // 1 = A(x - 1) + B x  =>  x^0: -A = 1, x^1: A + B = 0.
  Rational A(-1);
  Rational B = -A;
  auto e = expand_reciprocal(pts({0, 1}));
  CHECK(e.terms[0].coefficient == A);
  CHECK(e.terms[1].coefficient == B);
}

TEST_CASE("expand_reciprocal rejects repeated roots") {
  CHECK_THROWS_AS(expand_reciprocal(pts({1, 2, 1})), DuplicateRoot);
  CHECK_THROWS_AS(expand_reciprocal(pts({3, 3})), DuplicateRoot);
}

TEST_CASE("recombine examples") {
  CHECK(recombine(expand_reciprocal(pts({0, 1}))).is_constant(Rational(1)));
  CHECK(recombine(expand_reciprocal(pts({0, 1, 2}))).is_constant(Rational(1)));
  CHECK(recombine(expand_reciprocal(pts({5}))).is_constant(Rational(1)));
  PartialFractionExpansion<Rational> broken{{{Rational(0), Rational(1)}, {Rational(1), Rational(1)}}};
  CHECK_FALSE(recombine(broken).is_constant(Rational(1)));
}

TEST_CASE("n = 3 coefficients equal the Vandermonde-quotient form") {
  RationalSampler sampler(33);
  for (int c = 0; c < 300; ++c) {
    auto r = sampler.distinct_points(3);
    auto v = (r[0] - r[1]) * (r[1] - r[2]) * (r[2] - r[0]);
    auto e = expand_reciprocal(r);
    CHECK(e.terms[0].coefficient == (r[2] - r[1]) / v);
    CHECK(e.terms[1].coefficient == (r[0] - r[2]) / v);
    CHECK(e.terms[2].coefficient == (r[1] - r[0]) / v);
  }
}

TEST_CASE("recombination, residues, coefficient sum and pointwise values, n = 1..8") {
  RationalSampler sampler(1234);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int c = 0; c < 30; ++c) {
      auto roots = sampler.distinct_points(n);
      auto e = expand_reciprocal(roots);
      CAPTURE(n);
      CHECK(recombine(e).is_constant(Rational(1)));

      auto p = coefficients_from_roots(roots).monic;
      auto dp = p.derivative();
      Rational sum(0);
      for (const auto& t : e.terms) {
        CHECK(t.coefficient * dp(t.root) == Rational(1));
        sum += t.coefficient;
      }
      if (n >= 2) CHECK(sum == Rational(0));

      Rational x = sampler.next();
      if (p(x).is_zero()) continue;
      CHECK(e.evaluate(x) == Rational(1) / p(x));
    }
  }
}
