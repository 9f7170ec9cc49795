#include "narydiff/theta_difference.hpp"

#include <cmath>
#include <numbers>

#include "narydiff/error.hpp"

namespace narydiff {

namespace {

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw NonFiniteValue("theta difference inputs must be finite");
  }
}

using WideComplex = std::complex<long double>;

WideComplex wide_root_power(std::size_t order, std::size_t power) {
  if (order == 0) throw TooFewPoints("root of unity of order zero");
  power %= order;
  if ((4 * power) % order == 0) {
    switch ((4 * power) / order) {
      case 0: return {1.0L, 0.0L};
      case 1: return {0.0L, 1.0L};
      case 2: return {-1.0L, 0.0L};
      case 3: return {0.0L, -1.0L};
    }
  }
  return std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(power) /
                              static_cast<long double>(order));
}

// Sums are accumulated in extended precision so that the cancellation in
// 1 + theta + ... + theta^(n-1) = 0 survives rounding back to double.
Complex weighted_root_sum(std::span<const double> inputs) {
  const std::size_t n = inputs.size();
  WideComplex acc = 0.0L;
  for (std::size_t k = 0; k < n; ++k) acc += static_cast<long double>(inputs[k]) * wide_root_power(n, k);
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace

Complex root_of_unity_power(std::size_t order, std::size_t power) {
  auto w = wide_root_power(order, power);
  return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
}

bool is_primitive_root(Complex theta, std::size_t order, double tol) {
  Complex power = 1.0;
  for (std::size_t m = 1; m <= order; ++m) {
    power *= theta;
    bool is_one = std::abs(power - 1.0) <= tol;
    if (m < order && is_one) return false;
    if (m == order) return is_one;
  }
  return false;
}

ThetaDifference theta_diff(std::span<const double> inputs) {
  const std::size_t n = inputs.size();
  if (n < 2) throw TooFewPoints("theta difference needs at least two inputs, got " + std::to_string(n));
  require_finite(inputs);
  return ThetaDifference{{inputs.begin(), inputs.end()}, n, root_of_unity_power(n, 1), weighted_root_sum(inputs)};
}

DecompositionResidual theta_translation_check(std::span<const double> inputs, double shift) {
  std::vector<double> shifted(inputs.begin(), inputs.end());
  for (double& v : shifted) v += shift;
  Complex lhs = theta_diff(shifted).value;
  Complex rhs = theta_diff(inputs).value;
  return {lhs, rhs, lhs - rhs, "theta_diff(a + t) = theta_diff(a)"};
}

DecompositionResidual theta_claimed_decomposition_residual(double a, double b, double c, double d, double f) {
  auto bracket3 = [](double x, double y, double z) {
    const double v[] = {x, y, z};
    return theta_diff(v).value;
  };
  Complex lhs = bracket3(a, b, c);
  Complex rhs = bracket3(a, d, f) + bracket3(d, a, f) + bracket3(d, f, c);
  return {lhs, rhs, lhs - rhs, "[a,b,c] = [a,d,f] + [d,a,f] + [d,f,c]"};
}

}  // namespace narydiff
