#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "narydiff/cli/report.hpp"
#include "narydiff/partial_fractions.hpp"
#include "narydiff/rational.hpp"
#include "narydiff/vandermonde.hpp"

namespace narydiff::cli {

struct VerifyConfig {
  std::size_t n_max = 5;
  std::size_t cases = 200;
  std::uint64_t seed = 0;
};

/// The operations verify exercises. Defaults bind the library; tests swap in
/// deliberately broken versions to check that failures are caught.
struct VerifyKernels {
  using Points = PointList<Rational>;
  std::function<Rational(const Points&)> difference;
  std::function<Rational(const Points&, const Rational&)> bracket_sum;
  std::function<Rational(const Points&, const Rational&)> doubled_determinant;
  std::function<DensePolynomial<Rational>(const Points&)> recombined_reciprocal;
  std::function<Rational(const Points&)> det_product;
  std::function<Rational(const Points&)> det_laplace;
  std::function<Rational(const Points&)> det_fraction_free;

  static VerifyKernels library();
};

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct Counterexample {
  std::string check;
  std::vector<Rational> points;
  std::optional<Rational> pivot;
  std::string lhs;
  std::string rhs;
};

struct VerifyOutcome {
  std::vector<CheckTally> tallies;
  std::optional<Counterexample> counterexample;  // shrunk first failure
};

/// Throws narydiff::Error when the configuration is out of range.
VerifyOutcome run_verify(const VerifyConfig& config, const VerifyKernels& kernels = VerifyKernels::library());

CliReport verify_report(const VerifyConfig& config, const VerifyKernels& kernels = VerifyKernels::library());

}  // namespace narydiff::cli
