#pragma once

#include <cstdint>
#include <vector>

#include "narydiff/cli/report.hpp"
#include "narydiff/scalar.hpp"

namespace narydiff::cli {

inline constexpr std::size_t kBenchMaxFloat = 2000;
inline constexpr std::size_t kBenchMaxExact = 200;

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::size_t repeats = 3;
  Backend backend = Backend::exact;
  std::uint64_t seed = 0;
};

/// Median wall time of det_product and det_fraction_free per size. Throws
/// narydiff::Error for sizes below 2 or beyond the backend's guard.
CliReport bench_report(const BenchConfig& config);

}  // namespace narydiff::cli
