#pragma once

#include <cstdint>
#include <random>

#include "kappa/quadratic_form.hpp"

namespace kappa {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed for trial `trial` of a run seeded with `seed`: splitmix64(seed XOR
/// splitmix64(trial)). Any trial replays on its own from (seed, trial).
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial));
}

/// Numerators uniform in [-9, 9], denominators in [1, 9].
Rational random_small_rational(Rng& rng);

KElement<Rational> random_rational_element(Rng& rng, Orientation lambda);

/// Coefficients uniform in [-1, 1].
KElement<double> random_float_element(Rng& rng, Orientation lambda);

/// Makes f_K(x) = 0 exactly by re-solving one coefficient: X7 from X0 when
/// X0 != 0, else X6 from X1, X5 from X2, X4 from X3. If X0..X3 all vanish the
/// constraint already holds.
KElement<Rational> solve_constraint(KElement<Rational> x);

KElement<Rational> random_constrained_rational(Rng& rng, Orientation lambda);

/// Bound on the retries sample_s7 makes before giving up on degenerate draws.
inline constexpr int kSampleRetries = 64;

/// Postcondition tolerances; they scale with ρ² and ρ respectively once ρ > 1.
inline constexpr double kSampleConstraintTol = 1e-14;
inline constexpr double kSampleNormTol = 1e-14;

/// Point on the radius-ρ sphere cut out by f_K = 0. Draws 8 standard normals,
/// projects (X4..X7) onto the hyperplane f_K = 0 for the drawn q_r, then
/// rescales to norm ρ. Throws ContractViolation for ρ <= 0 and
/// std::runtime_error if every retry was degenerate.
KElement<double> sample_s7(std::uint64_t seed, double rho, Orientation lambda);

}  // namespace kappa
