#include "narydiff/cli/verify.hpp"

#include <algorithm>

#include "narydiff/difference.hpp"
#include "narydiff/error.hpp"
#include "narydiff/sampling.hpp"

namespace narydiff::cli {

namespace {

using Points = PointList<Rational>;

struct Verdict {
  bool holds;
  std::string lhs;
  std::string rhs;
};

// One randomized property: minimum n it applies to, whether it takes a
// pivot, and how to evaluate it on a single instance.
struct Property {
  std::string name;
  std::size_t min_n;
  bool uses_pivot;
  bool distinct_points;
  std::function<Verdict(const Points&, const Rational&)> evaluate;
};

std::string poly_text(const DensePolynomial<Rational>& p) {
  if (p.coefficients().empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ",";
    out += p.coefficients()[i].to_string();
  }
  return "[" + out + "]";
}

std::vector<Property> properties(const VerifyKernels& k) {
  std::vector<Property> props;
  props.push_back({"decomposition", 2, true, false, [&k](const Points& pts, const Rational& pivot) {
                     auto lhs = k.bracket_sum(pts, pivot);
                     auto rhs = k.difference(pts);
                     return Verdict{lhs == rhs, lhs.to_string(), rhs.to_string()};
                   }});
  props.push_back({"doubled_determinant", 2, true, false, [&k](const Points& pts, const Rational& pivot) {
                     auto lhs = k.doubled_determinant(pts, pivot);
                     auto rhs = Rational(2) * k.difference(pts);
                     return Verdict{lhs == rhs, lhs.to_string(), rhs.to_string()};
                   }});
  props.push_back({"partial_fraction_recombination", 1, false, true, [&k](const Points& pts, const Rational&) {
                     auto p = k.recombined_reciprocal(pts);
                     return Verdict{p.is_constant(Rational(1)), poly_text(p), "[1]"};
                   }});
  props.push_back({"oracle_agreement", 1, false, false, [&k](const Points& pts, const Rational&) {
                     auto product = k.det_product(pts);
                     auto laplace = k.det_laplace(pts);
                     auto elimination = k.det_fraction_free(pts);
                     bool holds = product == laplace && product == elimination;
                     return Verdict{holds, product.to_string(),
                                    laplace.to_string() + " (laplace), " + elimination.to_string() + " (fraction-free)"};
                   }});
  return props;
}

// Greedily drops points while the property keeps failing.
Counterexample shrink(const Property& prop, Points pts, const Rational& pivot, Verdict verdict) {
  bool progress = true;
  while (progress && pts.size() > std::max<std::size_t>(prop.min_n, 1)) {
    progress = false;
    for (std::size_t drop = 0; drop < pts.size(); ++drop) {
      std::vector<Rational> fewer;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i != drop) fewer.push_back(pts[i]);
      }
      Points candidate(std::move(fewer));
      auto v = prop.evaluate(candidate, pivot);
      if (!v.holds) {
        pts = std::move(candidate);
        verdict = std::move(v);
        progress = true;
        break;
      }
    }
  }
  Counterexample out{prop.name, {pts.begin(), pts.end()}, std::nullopt, verdict.lhs, verdict.rhs};
  if (prop.uses_pivot) out.pivot = pivot;
  return out;
}

}  // namespace

VerifyKernels VerifyKernels::library() {
  VerifyKernels k;
  k.difference = [](const Points& p) { return difference_nary(p); };
  k.bracket_sum = [](const Points& p, const Rational& x) { return decompose(p, x).total; };
  k.doubled_determinant = [](const Points& p, const Rational& x) { return narydiff::doubled_determinant(p, x).det_doubled; };
  k.recombined_reciprocal = [](const Points& p) { return recombine(expand_reciprocal(p)); };
  k.det_product = [](const Points& p) { return narydiff::det_product(p); };
  k.det_laplace = [](const Points& p) { return narydiff::det_laplace<Rational>(build_matrix(p)); };
  k.det_fraction_free = [](const Points& p) { return narydiff::det_fraction_free(build_matrix(p)); };
  return k;
}

VerifyOutcome run_verify(const VerifyConfig& config, const VerifyKernels& kernels) {
  if (config.n_max < 2 || config.n_max > kLaplaceMaxDimension) {
    throw DimensionTooLarge("verify needs 2 <= n-max <= " + std::to_string(kLaplaceMaxDimension));
  }
  if (config.cases < 1) throw Error("verify needs at least one case");

  RationalSampler sampler(config.seed);
  auto props = properties(kernels);
  VerifyOutcome outcome;
  for (const auto& p : props) outcome.tallies.push_back({p.name});

  for (std::size_t n = 1; n <= config.n_max; ++n) {
    for (std::size_t c = 0; c < config.cases; ++c) {
      // One shared draw per case; every fourth case repeats a point so the
      // degenerate V = 0 branch is always exercised.
      bool force_duplicate = n >= 2 && c % 4 == 3;
      Points pts = force_duplicate ? sampler.points_with_duplicate(n) : sampler.points(n);
      Points distinct = sampler.distinct_points(n);
      Rational pivot = sampler.next();

      for (std::size_t i = 0; i < props.size(); ++i) {
        const auto& prop = props[i];
        if (n < prop.min_n) continue;
        const Points& input = prop.distinct_points ? distinct : pts;
        auto verdict = prop.evaluate(input, pivot);
        if (verdict.holds) {
          ++outcome.tallies[i].passed;
        } else {
          ++outcome.tallies[i].failed;
          if (!outcome.counterexample) outcome.counterexample = shrink(prop, input, pivot, verdict);
        }
      }
    }
  }
  return outcome;
}

CliReport verify_report(const VerifyConfig& config, const VerifyKernels& kernels) {
  auto outcome = run_verify(config, kernels);
  CliReport report;
  report.command = "verify";
  report.backend = "exact";
  report.inputs = {{"n_max", config.n_max}, {"cases", config.cases}, {"seed", config.seed}};

  nlohmann::ordered_json tallies = nlohmann::ordered_json::object();
  for (const auto& t : outcome.tallies) {
    tallies[t.name] = {{"passed", t.passed}, {"failed", t.failed}};
    report.identity_checks.push_back(
        {t.name, t.failed == 0, std::to_string(t.passed), std::to_string(t.passed + t.failed)});
  }
  report.results["checks"] = tallies;
  if (outcome.counterexample) {
    const auto& ce = *outcome.counterexample;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& p : ce.points) points.push_back(p.to_string());
    report.results["counterexample"] = {{"check", ce.check},
                                        {"points", points},
                                        {"pivot", ce.pivot ? ce.pivot->to_string() : ""},
                                        {"lhs", ce.lhs},
                                        {"rhs", ce.rhs}};
  } else {
    report.results["counterexample"] = nullptr;
  }
  return report;
}

}  // namespace narydiff::cli
