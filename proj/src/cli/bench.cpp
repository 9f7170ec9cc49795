#include "narydiff/cli/bench.hpp"

#include <algorithm>
#include <chrono>

#include "narydiff/error.hpp"
#include "narydiff/sampling.hpp"
#include "narydiff/vandermonde.hpp"

namespace narydiff::cli {

namespace {

template <class F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  auto mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

template <Scalar T>
void bench_backend(const BenchConfig& config, CliReport& report) {
  // Small-magnitude rationals keep exact entries of x^(n-1) manageable.
  RationalSampler sampler(config.seed, 1000, 10);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (auto n : config.sizes) {
    auto pts = convert_points<T>(sampler.points(n));
    auto matrix = build_matrix(pts);
    std::vector<double> product_ms;
    std::vector<double> elimination_ms;
    T product{};
    T elimination{};
    for (std::size_t r = 0; r < config.repeats; ++r) {
      product_ms.push_back(time_ms([&] { product = det_product(pts); }));
      elimination_ms.push_back(time_ms([&] { elimination = det_fraction_free(matrix); }));
    }
    rows.push_back({{"n", n},
                    {"det_product_median_ms", median(product_ms)},
                    {"det_fraction_free_median_ms", median(elimination_ms)}});
    if constexpr (ScalarTraits<T>::backend == Backend::exact) {
      report.identity_checks.push_back({"det_product=det_fraction_free (n=" + std::to_string(n) + ")",
                                        product == elimination, product.to_string(), elimination.to_string()});
    }
  }
  report.results["timings"] = rows;
}

}  // namespace

CliReport bench_report(const BenchConfig& config) {
  if (config.sizes.empty()) throw Error("bench needs at least one size");
  if (config.repeats < 1) throw Error("bench needs repeats >= 1");
  const bool exact = config.backend == Backend::exact;
  const std::size_t limit = exact ? kBenchMaxExact : kBenchMaxFloat;
  for (auto n : config.sizes) {
    if (n < 2) throw Error("bench sizes must be >= 2, got " + std::to_string(n));
    if (n > limit) {
      throw DimensionTooLarge("bench size " + std::to_string(n) + " exceeds the " +
                              (exact ? std::string("exact") : std::string("float")) + " backend limit of " +
                              std::to_string(limit));
    }
  }

  CliReport report;
  report.command = "bench";
  report.backend = exact ? "exact" : "float";
  nlohmann::ordered_json sizes = config.sizes;
  report.inputs = {{"n", sizes}, {"repeats", config.repeats}, {"seed", config.seed}};
  if (exact) {
    bench_backend<Rational>(config, report);
  } else {
    bench_backend<double>(config, report);
  }
  return report;
}

}  // namespace narydiff::cli
