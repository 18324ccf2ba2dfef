#pragma once

// Named verification suites. Each suite is deterministic given (seed, trials,
// field mode); random trials draw from trial_seed(seed, trial) and alternate
// orientation by trial parity (even: λ = +1, odd: λ = -1).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "kappa/field.hpp"

namespace kappa {

struct Counterexample {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::string message;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
};

struct SuiteReport {
  std::string suite;
  FieldMode field = FieldMode::Rational;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  /// First few failures, replayable from (seed, trial).
  std::vector<Counterexample> counterexamples;
  /// Largest residual seen; always set for float runs, never for rational ones.
  std::optional<double> max_residual;
  /// Named intermediate values worth printing (e.g. the zero-divisor walkthrough).
  std::vector<std::pair<std::string, std::string>> details;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures == 0; }
};

inline constexpr std::size_t kMaxStoredCounterexamples = 8;

/// Default absolute tolerance for float-mode comparisons.
inline constexpr double kDefaultTolerance = 1e-10;

SuiteReport suite_table();
SuiteReport suite_product_oracle(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                                 double tol = kDefaultTolerance);
SuiteReport suite_associativity(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                                double tol = kDefaultTolerance);
SuiteReport suite_epsilon();
SuiteReport suite_qform_identity(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                                 double tol = kDefaultTolerance);
SuiteReport suite_dual_quaternion(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                                  double tol = kDefaultTolerance);
SuiteReport suite_norm_equivalence(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                                   double tol = kDefaultTolerance);
SuiteReport suite_composition(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                              double tol = kDefaultTolerance);
SuiteReport suite_norm_relation(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                                double tol = kDefaultTolerance);
SuiteReport suite_orthogonality_closure(std::uint64_t trials, std::uint64_t seed, FieldMode mode,
                                        double tol = kDefaultTolerance);
SuiteReport suite_zero_divisor(FieldMode mode, double tol = kDefaultTolerance);
SuiteReport suite_tower();

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  std::vector<FieldMode> modes = {FieldMode::Rational, FieldMode::Float};
  double tolerance = kDefaultTolerance;
  /// Empty runs every suite.
  std::vector<std::string> suites;
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();

/// Suites that have no float variant (their checks are exhaustive and exact).
bool suite_is_exact_only(const std::string& name);

SuiteReport run_suite(const std::string& name, const VerifyConfig& config, FieldMode mode);

/// Every selected suite, rational runs first, then float. Exact-only suites
/// run once.
std::vector<SuiteReport> run_all(const VerifyConfig& config);

nlohmann::ordered_json report_to_json(const SuiteReport& report, bool include_timing = false);

/// Fixed-width summary, one row per report.
std::string summary_table(const std::vector<SuiteReport>& reports, bool include_timing = true);

}  // namespace kappa
