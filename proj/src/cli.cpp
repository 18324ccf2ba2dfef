#include "kappa/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kappa/dual_quaternion.hpp"
#include "kappa/element_json.hpp"
#include "kappa/quadratic_form.hpp"
#include "kappa/render.hpp"
#include "kappa/sampling.hpp"
#include "kappa/verify.hpp"

namespace kappa {

namespace {

struct Options {
  long lambda = 1;
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  std::string field = "both";
  double tolerance = kDefaultTolerance;
  std::string format = "text";
  std::vector<std::string> suites;
  bool timings = false;
  std::string report_path;
  std::size_t count = 1;
  double rho = 1.0;
  std::string element;
};

int cmd_table(const Options& o, std::ostream& out) {
  const TableFormat format = parse_table_format(o.format);
  out << render_table(derive_table(orientation_from_int(o.lambda)), format);
  return kExitOk;
}

std::size_t code_points(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

void print_details(const SuiteReport& r, std::ostream& out) {
  if (r.details.empty() && r.counterexamples.empty()) return;
  out << "\n[" << r.suite << ", " << to_string(r.field) << "]\n";
  std::size_t width = 0;
  for (const auto& [k, v] : r.details) width = std::max(width, code_points(k));
  for (const auto& [k, v] : r.details) {
    out << "  " << k << std::string(width - code_points(k), ' ') << " : " << v << '\n';
  }
  for (const Counterexample& c : r.counterexamples) {
    out << "  FAIL trial " << c.trial << " (trial seed " << c.seed << "): " << c.message << '\n';
    if (!c.inputs.empty()) out << "    inputs " << c.inputs.dump() << '\n';
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  config.tolerance = o.tolerance;
  config.suites = o.suites;
  if (o.field == "rational") {
    config.modes = {FieldMode::Rational};
  } else if (o.field == "float") {
    config.modes = {FieldMode::Float};
  } else {
    config.modes = {FieldMode::Rational, FieldMode::Float};
  }

  const std::vector<SuiteReport> reports = run_all(config);
  const bool all_passed =
      std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });

  std::ostringstream lines;
  for (const SuiteReport& r : reports) lines << report_to_json(r, o.timings).dump() << '\n';

  if (o.format == "json") {
    out << lines.str();
  } else {
    out << summary_table(reports, o.timings);
    for (const SuiteReport& r : reports) print_details(r, out);
    out << '\n' << (all_passed ? "all suites passed" : "verification FAILED") << '\n';
  }
  if (!o.report_path.empty()) {
    std::ofstream file(o.report_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write report to '" + o.report_path + "'");
    file << lines.str();
  }
  return all_passed ? kExitOk : kExitFailure;
}

int cmd_sample(const Options& o, std::ostream& out) {
  if (o.count < 1) throw ContractViolation("sample needs -n >= 1");
  const Orientation lambda = orientation_from_int(o.lambda);
  for (std::size_t i = 0; i < o.count; ++i) {
    out << dump_element(sample_s7(trial_seed(o.seed, i), o.rho, lambda)) << '\n';
  }
  return kExitOk;
}

template <Field T>
nlohmann::ordered_json quaternion_json(const Quaternion<T>& q) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (int k = 0; k < 4; ++k) j.push_back(FieldTraits<T>::format(q[k]));
  return j;
}

template <Field T>
nlohmann::ordered_json evaluate(const KElement<T>& x, double tol) {
  using F = FieldTraits<T>;
  nlohmann::ordered_json j;
  j["element"] = element_to_json(x);
  const T na2 = norm_a_squared(x);
  j["norm_a_squared"] = F::format(na2);
  if (auto root = F::sqrt(na2)) {
    j["norm_a"] = F::format(*root);
  } else {
    j["norm_a"] = nullptr;
    j["norm_a_approx"] = std::sqrt(F::to_double(na2));
  }
  const NormResult<T> nb = norm_b_squared(x, tol);
  if (const T* v = std::get_if<T>(&nb)) {
    j["norm_b_squared"] = F::format(*v);
    auto root = F::sqrt(*v);
    j["norm_b"] = root ? nlohmann::ordered_json(F::format(*root)) : nlohmann::ordered_json();
    j["split_residual"] = nullptr;
  } else {
    const SplitScalar<T>& q = std::get<SplitResidual<T>>(nb).form;
    j["norm_b_squared"] = nullptr;
    j["norm_b"] = nullptr;
    j["split_residual"] = {{"s", F::format(q.s)}, {"p", F::format(q.p)}};
  }
  j["f_K"] = F::format(constraint_f(x));
  const DualQuatView<T> v = to_dual_quaternion(x);
  j["q_r"] = quaternion_json(v.real);
  j["q_d"] = quaternion_json(v.dual);
  return j;
}

void print_eval_text(const nlohmann::ordered_json& j, std::ostream& out) {
  const auto str = [](const nlohmann::ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  out << "norm_a   : ";
  if (j["norm_a"].is_null()) {
    out << "sqrt(" << str(j["norm_a_squared"]) << ") ~ " << j["norm_a_approx"].dump() << '\n';
  } else {
    out << str(j["norm_a"]) << '\n';
  }
  out << "norm_b   : ";
  if (!j["split_residual"].is_null()) {
    out << "error: X X† = " << str(j["split_residual"]["s"]) << " + (" << str(j["split_residual"]["p"])
        << ") ε is not a scalar\n";
  } else if (j["norm_b"].is_null()) {
    out << "sqrt(" << str(j["norm_b_squared"]) << ")\n";
  } else {
    out << str(j["norm_b"]) << '\n';
  }
  out << "f_K      : " << str(j["f_K"]) << '\n';
  const auto quat = [&](const nlohmann::ordered_json& q) {
    std::string s = "(";
    for (std::size_t i = 0; i < q.size(); ++i) s += (i ? ", " : "") + str(q[i]);
    return s + ")";
  };
  out << "q_r      : " << quat(j["q_r"]) << '\n';
  out << "q_d      : " << quat(j["q_d"]) << '\n';
}

int cmd_eval(const Options& o, std::istream& in, std::ostream& out) {
  std::string text = o.element;
  if (text.empty()) text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  const nlohmann::ordered_json j = o.field == "float"
                                       ? evaluate(parse_element<double>(text), o.tolerance)
                                       : evaluate(parse_element<Rational>(text), o.tolerance);
  if (o.format == "json") {
    out << j.dump() << '\n';
  } else {
    print_eval_text(j, out);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"K^λ algebra kernel and verifier", "kappa"};
  app.require_subcommand(1);

  CLI::App* table = app.add_subcommand("table", "print the multiplication table");
  table->add_option("--lambda", o.lambda, "orientation, 1 or -1")->check(CLI::IsMember({1L, -1L}));
  table->add_option("--format", o.format, "text | json | csv | markdown")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--seed", o.seed, "base seed");
  verify->add_option("--trials", o.trials, "random trials per suite");
  verify->add_option("--field", o.field, "rational | float | both")
      ->check(CLI::IsMember({"rational", "float", "both"}));
  verify->add_option("--tolerance", o.tolerance, "float-mode absolute tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--suite", o.suites, "suite to run (repeatable)")->check(CLI::IsMember(suite_names()));
  verify->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--timings", o.timings, "include elapsed times");
  verify->add_option("--report", o.report_path, "also write JSON lines to FILE");

  CLI::App* sample = app.add_subcommand("sample", "draw points on the constraint sphere");
  sample->add_option("-n", o.count, "number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--rho", o.rho, "radius")->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "seed");
  sample->add_option("--lambda", o.lambda, "orientation, 1 or -1")->check(CLI::IsMember({1L, -1L}));

  CLI::App* eval = app.add_subcommand("eval", "norms, constraint and dual-quaternion parts of an element");
  eval->add_option("--element", o.element, "element JSON (default: read stdin)");
  eval->add_option("--field", o.field, "rational | float")->check(CLI::IsMember({"rational", "float"}));
  eval->add_option("--tolerance", o.tolerance, "float-mode tolerance for norm (b)")
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return cmd_table(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*sample) return cmd_sample(o, out);
    if (*eval) {
      if (o.field == "both") o.field = "rational";
      return cmd_eval(o, in, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace kappa
