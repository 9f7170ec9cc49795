#include "narydiff/cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "narydiff/cli/bench.hpp"
#include "narydiff/cli/report.hpp"
#include "narydiff/cli/verify.hpp"
#include "narydiff/difference.hpp"
#include "narydiff/partial_fractions.hpp"
#include "narydiff/sampling.hpp"
#include "narydiff/theta_difference.hpp"
#include "narydiff/vandermonde.hpp"

namespace narydiff::cli {

namespace {

struct Options {
  std::string points;
  std::string points_file;
  std::string pivot;
  std::string shift;
  std::string backend = "exact";
  std::string output = "text";
  bool claim = false;
  std::size_t n_max = 5;
  std::size_t cases = 200;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes;
  std::size_t repeats = 3;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Rational> input_points(const Options& opt) {
  if (opt.points.empty() == opt.points_file.empty()) throw UsageError("give exactly one of --points or --points-file");
  auto texts = opt.points.empty() ? read_points_file(opt.points_file) : split_points(opt.points);
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Rational::parse(t));
  if (out.empty()) throw UsageError("no points given");
  return out;
}

Rational required_pivot(const Options& opt) {
  if (opt.pivot.empty()) throw UsageError("this command requires --pivot");
  return Rational::parse(opt.pivot);
}

template <Scalar T>
nlohmann::ordered_json value_json(const T& v) {
  if constexpr (std::same_as<T, Rational>) {
    return v.to_string();
  } else {
    return v;
  }
}

template <Scalar T>
nlohmann::ordered_json values_json(std::span<const T> vs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : vs) out.push_back(value_json(v));
  return out;
}

template <Scalar T>
IdentityCheck check(std::string name, const T& lhs, const T& rhs, const T& scale = T(0)) {
  return {std::move(name), scalars_agree(lhs, rhs, scale), ScalarTraits<T>::to_string(lhs),
          ScalarTraits<T>::to_string(rhs)};
}

template <Scalar T>
PointList<T> to_backend(const std::vector<Rational>& pts) {
  return convert_points<T>(PointList<Rational>(pts));
}

template <Scalar T>
void cmd_diff(const std::vector<Rational>& raw, CliReport& report) {
  auto pts = to_backend<T>(raw);
  T v = difference_nary(pts);
  report.results["value"] = value_json(v);
  auto m = build_matrix(pts);
  report.identity_checks.push_back(check("det_product=det_fraction_free", v, det_fraction_free(m)));
  if (pts.size() <= kLaplaceMaxDimension) {
    report.identity_checks.push_back(check("det_product=det_laplace", v, det_laplace<T>(m)));
  }
}

template <Scalar T>
void cmd_decompose(const std::vector<Rational>& raw, const Rational& raw_pivot, CliReport& report) {
  auto pts = to_backend<T>(raw);
  auto pivot = ScalarTraits<T>::from_rational(raw_pivot);
  auto d = decompose(pts, pivot);
  std::vector<T> terms;
  for (const auto& b : d.terms) terms.push_back(b.value);
  report.results["terms"] = values_json<T>(terms);
  report.results["total"] = value_json(d.total);
  report.results["reference"] = value_json(d.reference);
  report.identity_checks.push_back(check("decomposition", d.total, d.reference, d.magnitude()));
}

template <Scalar T>
void cmd_doubled(const std::vector<Rational>& raw, const Rational& raw_pivot, CliReport& report) {
  auto pts = to_backend<T>(raw);
  auto r = doubled_determinant(pts, ScalarTraits<T>::from_rational(raw_pivot));
  report.results["det_doubled"] = value_json(r.det_doubled);
  report.results["expected"] = value_json(r.expected);
  report.identity_checks.push_back(check("doubled_determinant", r.det_doubled, r.expected));
}

template <Scalar T>
void cmd_distance(const std::vector<Rational>& raw, const std::optional<Rational>& raw_shift, CliReport& report) {
  auto pts = to_backend<T>(raw);
  T d = distance_nary(pts);
  // Without an explicit shift the origin is moved onto the first point.
  T shift = raw_shift ? ScalarTraits<T>::from_rational(*raw_shift) : T(0) - pts[0];
  T moved = distance_nary(pts.translated(shift));
  report.results["value"] = value_json(d);
  report.results["shift"] = value_json(shift);
  report.results["shifted_value"] = value_json(moved);
  report.identity_checks.push_back(check("translation_invariance", moved, d));
}

template <Scalar T>
void cmd_partfrac(const std::vector<Rational>& raw, CliReport& report) {
  auto roots = to_backend<T>(raw);
  auto expansion = expand_reciprocal(roots);
  auto poly = coefficients_from_roots(roots);
  auto recombined = recombine(expansion);

  std::vector<T> coefficients;
  for (const auto& t : expansion.terms) coefficients.push_back(t.coefficient);
  report.results["coefficients"] = values_json<T>(coefficients);
  report.results["polynomial_ascending"] = values_json<T>(poly.monic.coefficients());
  report.results["recombined_ascending"] = values_json<T>(recombined.coefficients());

  bool recombination_holds;
  if constexpr (std::same_as<T, Rational>) {
    recombination_holds = recombined.is_constant(T(1));
  } else {
    recombination_holds = recombined.degree() >= 0 && scalars_agree(recombined.coefficient(0), 1.0);
    for (std::size_t p = 1; p < recombined.coefficients().size(); ++p) {
      recombination_holds = recombination_holds && scalars_agree(recombined.coefficient(p), 0.0, 1.0);
    }
  }
  std::string recombined_text;
  for (std::size_t i = 0; i < recombined.coefficients().size(); ++i) {
    if (i) recombined_text += ",";
    recombined_text += ScalarTraits<T>::to_string(recombined.coefficients()[i]);
  }
  report.identity_checks.push_back({"recombination", recombination_holds, "[" + recombined_text + "]", "[1]"});

  if (roots.size() >= 2) {
    T sum(0);
    T scale(0);
    for (const auto& c : coefficients) {
      sum = sum + c;
      scale = scale + ScalarTraits<T>::abs(c);
    }
    report.identity_checks.push_back(check("coefficient_sum_zero", sum, T(0), scale));
  }
  auto derivative = poly.monic.derivative();
  bool residues = true;
  for (const auto& t : expansion.terms) residues = residues && scalars_agree(t.coefficient * derivative(t.root), T(1));
  report.identity_checks.push_back({"residues", residues, "c_i * P'(x_i)", "1"});
}

void cmd_theta(const std::vector<Rational>& raw, const std::optional<Rational>& raw_shift, bool claim,
               CliReport& report) {
  std::vector<double> inputs;
  for (const auto& r : raw) inputs.push_back(make_float64(r.to_double()));

  if (claim) {
    if (inputs.size() != 5) throw UsageError("--claim takes exactly five points a,b,c,d,f");
    auto r = theta_claimed_decomposition_residual(inputs[0], inputs[1], inputs[2], inputs[3], inputs[4]);
    report.results["claim"] = r.claim;
    report.results["lhs"] = complex_json(r.lhs);
    report.results["rhs"] = complex_json(r.rhs);
    report.results["residual"] = complex_json(r.residual);
    report.results["residual_abs"] = std::abs(r.residual);
    report.results["residual_text"] = complex_text(r.residual);
    return;
  }

  auto t = theta_diff(inputs);
  report.results["order"] = t.order;
  report.results["theta"] = complex_json(t.theta);
  report.results["value"] = complex_json(t.value);
  report.results["value_text"] = complex_text(t.value);
  if (t.order == 2) {
    double expected = inputs[0] - inputs[1];
    bool holds = std::abs(t.value - Complex(expected, 0.0)) <= 1e-12 * std::max(1.0, std::fabs(expected));
    report.identity_checks.push_back({"binary_reduction", holds, complex_text(t.value), complex_text({expected, 0.0})});
  }
  if (raw_shift) {
    auto r = theta_translation_check(inputs, make_float64(raw_shift->to_double()));
    report.results["translation_residual"] = complex_json(r.residual);
    report.identity_checks.push_back(
        {"theta_translation_invariance", std::abs(r.residual) <= 1e-10, complex_text(r.lhs), complex_text(r.rhs)});
  }
}

nlohmann::ordered_json echo_points(const std::vector<Rational>& pts) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& p : pts) out.push_back(p.to_string());
  return out;
}

std::uint64_t effective_seed(std::uint64_t flag_value) {
  if (const char* env = std::getenv("NARYDIFF_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("NARYDIFF_SEED is not a non-negative integer: ") + env);
  }
  return flag_value;
}

void emit(const CliReport& report, const Options& opt, std::ostream& out) {
  if (opt.output == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
}

void report_violations(const CliReport& report, std::ostream& err) {
  for (const auto& c : report.identity_checks) {
    if (!c.holds) err << "identity violated: " << c.name << ": lhs = " << c.lhs << ", rhs = " << c.rhs << "\n";
  }
  if (report.results.contains("counterexample") && !report.results["counterexample"].is_null()) {
    err << "counterexample: " << report.results["counterexample"].dump() << "\n";
  }
}

}  // namespace

std::vector<std::string> split_points(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto comma = list.find(',', start);
    auto field = trim(list.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (field.empty()) throw ParseError("empty entry in point list '" + list + "'");
    out.push_back(field);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open points file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(t);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact n-ary differences built from Vandermonde determinants", "narydiff"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub, bool points) {
    if (points) {
      sub->add_option("--points", opt.points, "comma-separated rationals, e.g. 0,1/2,-0.25");
      sub->add_option("--points-file", opt.points_file, "one rational per line, '#' comments");
    }
    sub->add_option("--output", opt.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_backend = [&opt](CLI::App* sub) {
    sub->add_option("--backend", opt.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  };

  auto* diff = app.add_subcommand("diff", "n-ary difference V of the points");
  add_common(diff, true);
  add_backend(diff);

  auto* decompose_cmd = app.add_subcommand("decompose", "split V into the brackets at a pivot");
  add_common(decompose_cmd, true);
  add_backend(decompose_cmd);
  decompose_cmd->add_option("--pivot", opt.pivot, "pivot quantity");

  auto* doubled = app.add_subcommand("doubled", "determinant of the doubled matrix AV(x) against 2V");
  add_common(doubled, true);
  add_backend(doubled);
  doubled->add_option("--pivot", opt.pivot, "pivot quantity");

  auto* distance = app.add_subcommand("distance", "|V| of distances from a common origin");
  add_common(distance, true);
  add_backend(distance);
  distance->add_option("--shift", opt.shift, "origin displacement for the invariance check");

  auto* partfrac = app.add_subcommand("partfrac", "partial fractions of 1/prod(x - x_i)");
  add_common(partfrac, true);
  add_backend(partfrac);

  auto* theta = app.add_subcommand("theta", "root-of-unity difference sum a_k theta^(k-1)");
  add_common(theta, true);
  add_backend(theta);
  theta->add_option("--shift", opt.shift, "translation for the invariance check");
  theta->add_flag("--claim", opt.claim, "evaluate [a,b,c] - ([a,d,f]+[d,a,f]+[d,f,c]) for points a,b,c,d,f");

  auto* verify = app.add_subcommand("verify", "randomized exact checks of every identity");
  add_common(verify, false);
  verify->add_option("--n-max", opt.n_max, "largest n (2..8)");
  verify->add_option("--cases", opt.cases, "cases per n");
  verify->add_option("--seed", opt.seed, "RNG seed (NARYDIFF_SEED overrides)");

  auto* bench = app.add_subcommand("bench", "time det_product against det_fraction_free");
  add_common(bench, false);
  add_backend(bench);
  bench->add_option("--n", opt.sizes, "comma-separated sizes")->delimiter(',')->required();
  bench->add_option("--repeats", opt.repeats, "repeats per size");
  bench->add_option("--seed", opt.seed, "RNG seed (NARYDIFF_SEED overrides)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  CliReport report;
  try {
    auto start = std::chrono::steady_clock::now();
    const bool exact = opt.backend == "exact";
    std::optional<Rational> shift;
    if (!opt.shift.empty()) shift = Rational::parse(opt.shift);

    auto begin_report = [&](const char* name, const std::vector<Rational>& pts) {
      report.command = name;
      report.backend = opt.backend;
      report.inputs["points"] = echo_points(pts);
    };

    if (diff->parsed()) {
      auto pts = input_points(opt);
      begin_report("diff", pts);
      exact ? cmd_diff<Rational>(pts, report) : cmd_diff<double>(pts, report);
    } else if (decompose_cmd->parsed()) {
      auto pts = input_points(opt);
      auto pivot = required_pivot(opt);
      begin_report("decompose", pts);
      report.inputs["pivot"] = pivot.to_string();
      exact ? cmd_decompose<Rational>(pts, pivot, report) : cmd_decompose<double>(pts, pivot, report);
    } else if (doubled->parsed()) {
      auto pts = input_points(opt);
      auto pivot = required_pivot(opt);
      begin_report("doubled", pts);
      report.inputs["pivot"] = pivot.to_string();
      exact ? cmd_doubled<Rational>(pts, pivot, report) : cmd_doubled<double>(pts, pivot, report);
    } else if (distance->parsed()) {
      auto pts = input_points(opt);
      begin_report("distance", pts);
      exact ? cmd_distance<Rational>(pts, shift, report) : cmd_distance<double>(pts, shift, report);
    } else if (partfrac->parsed()) {
      auto pts = input_points(opt);
      begin_report("partfrac", pts);
      exact ? cmd_partfrac<Rational>(pts, report) : cmd_partfrac<double>(pts, report);
    } else if (theta->parsed()) {
      auto pts = input_points(opt);
      begin_report("theta", pts);
      report.backend = "float";
      if (shift) report.inputs["shift"] = shift->to_string();
      cmd_theta(pts, shift, opt.claim, report);
    } else if (verify->parsed()) {
      report = verify_report({opt.n_max, opt.cases, effective_seed(opt.seed)});
    } else if (bench->parsed()) {
      report = bench_report({opt.sizes, opt.repeats, exact ? Backend::exact : Backend::float64,
                             effective_seed(opt.seed)});
    }
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  emit(report, opt, out);
  if (!report.all_hold()) {
    report_violations(report, err);
    return kExitIdentityViolated;
  }
  return kExitOk;
}

}  // namespace narydiff::cli
