#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace narydiff {

using Complex = std::complex<double>;

/// theta^power for theta = exp(2 pi i / order). Quarter turns are returned
/// exactly so that, e.g., order 2 gives theta = -1 with zero imaginary part.
Complex root_of_unity_power(std::size_t order, std::size_t power);

/// |theta^n - 1| <= tol and |theta^m - 1| > tol for 0 < m < n.
bool is_primitive_root(Complex theta, std::size_t order, double tol = 1e-12);

/// a_1 + a_2 theta + ... + a_n theta^(n-1), theta a primitive n-th root of unity.
struct ThetaDifference {
  std::vector<double> inputs;
  std::size_t order;
  Complex theta;
  Complex value;
};

ThetaDifference theta_diff(std::span<const double> inputs);

/// Records both sides of an identity for the theta difference. The residual
/// is data, not a verdict.
struct DecompositionResidual {
  Complex lhs;
  Complex rhs;
  Complex residual;
  std::string claim;
};

/// Compares theta_diff(inputs + t) with theta_diff(inputs).
DecompositionResidual theta_translation_check(std::span<const double> inputs, double shift);

/// [a,b,c] against [a,d,f] + [d,a,f] + [d,f,c], all with the cube root of unity.
DecompositionResidual theta_claimed_decomposition_residual(double a, double b, double c, double d, double f);

}  // namespace narydiff
