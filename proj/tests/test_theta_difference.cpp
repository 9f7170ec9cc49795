#include <doctest.h>

#include <random>

#include "narydiff/error.hpp"
#include "narydiff/theta_difference.hpp"

using namespace narydiff;

namespace {

ThetaDifference diff_of(std::initializer_list<double> v) { return theta_diff(std::vector<double>(v)); }

}  // namespace

TEST_CASE("theta_diff examples") {
  auto two = diff_of({5, 3});
  CHECK(two.value.real() == 2.0);
  CHECK(two.value.imag() == 0.0);
  CHECK(two.theta == Complex(-1.0, 0.0));
  CHECK(std::abs(diff_of({4.5, 4.5, 4.5}).value) <= 1e-12);
  auto one = diff_of({1, 0, 0});
  CHECK(one.value == Complex(1.0, 0.0));
  CHECK(one.order == 3);
  CHECK_THROWS_AS(diff_of({1}), TooFewPoints);
  CHECK_THROWS_AS(diff_of({1, std::numeric_limits<double>::infinity()}), NonFiniteValue);
}

TEST_CASE("theta is a primitive root of unity") {
  for (std::size_t n = 2; n <= 12; ++n) {
    auto theta = root_of_unity_power(n, 1);
    CHECK(std::abs(std::pow(theta, static_cast<int>(n)) - 1.0) <= 1e-12);
    CHECK(is_primitive_root(theta, n));
  }
  CHECK_FALSE(is_primitive_root(root_of_unity_power(6, 2), 6));
  CHECK(root_of_unity_power(4, 1) == Complex(0.0, 1.0));
  CHECK(root_of_unity_power(3, 3) == Complex(1.0, 0.0));
  CHECK(std::abs(root_of_unity_power(3, 1) - Complex(-0.5, std::sqrt(3.0) / 2)) <= 1e-15);
}

TEST_CASE("theta_translation_check examples") {
  CHECK(std::abs(theta_translation_check(std::vector<double>{1, 2, 4}, 10).residual) <= 1e-10);
  CHECK(std::abs(theta_translation_check(std::vector<double>{5, 3}, -5).residual) <= 1e-15);
  CHECK(std::abs(theta_translation_check(std::vector<double>{0, 0, 0}, 1).residual) <= 1e-10);
}

TEST_CASE("claimed five-variable decomposition is reported, not asserted") {
  auto zero = theta_claimed_decomposition_residual(0, 0, 0, 0, 0);
  CHECK(zero.residual == Complex(0.0, 0.0));
  auto ones = theta_claimed_decomposition_residual(1, 1, 1, 1, 1);
  CHECK(std::abs(ones.residual) <= 1e-12);
  // lhs - rhs = (1 + 2t + 3t^2) - (1 + t + 3t^2) = t by hand.
  auto r = theta_claimed_decomposition_residual(1, 2, 3, 0, 0);
  CHECK(std::abs(r.residual - root_of_unity_power(3, 1)) <= 1e-12);
  CHECK(std::abs(r.residual - (r.lhs - r.rhs)) == 0.0);
  CHECK_FALSE(r.claim.empty());
  MESSAGE("claimed decomposition residual at (1,2,3,0,0): (", r.residual.real(), ", ", r.residual.imag(), ")");
}

TEST_CASE("binary reduction, vanishing on constants, translation and linearity on random inputs") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> value(-100.0, 100.0);
  std::uniform_int_distribution<std::size_t> order(2, 9);
  for (int c = 0; c < 500; ++c) {
    double a = value(rng);
    double b = value(rng);
    auto two = diff_of({a, b});
    CHECK(std::abs(two.value - Complex(a - b, 0.0)) <= 1e-12 * std::max(1.0, std::abs(a - b)));
    CHECK(two.value.imag() == 0.0);

    std::size_t n = order(rng);
    double k = value(rng);
    CHECK(std::abs(theta_diff(std::vector<double>(n, k)).value) <= 1e-12 * std::max(1.0, std::abs(k)));

    std::vector<double> u(n);
    std::vector<double> v(n);
    for (auto& x : u) x = value(rng);
    for (auto& x : v) x = value(rng);
    CHECK(std::abs(theta_translation_check(u, value(rng)).residual) <= 1e-10);

    double alpha = value(rng) / 10;
    double beta = value(rng) / 10;
    std::vector<double> mix(n);
    for (std::size_t i = 0; i < n; ++i) mix[i] = alpha * u[i] + beta * v[i];
    auto lhs = theta_diff(mix).value;
    auto rhs = alpha * theta_diff(u).value + beta * theta_diff(v).value;
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}
