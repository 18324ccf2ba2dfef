#include "kappa/sampling.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace kappa {

Rational random_small_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  const long n = num(rng);
  const long d = den(rng);
  return FieldTraits<Rational>::from_ratio(n, d);
}

KElement<Rational> random_rational_element(Rng& rng, Orientation lambda) {
  KElement<Rational> x = KElement<Rational>::zero(lambda);
  for (Rational& c : x.coeffs) c = random_small_rational(rng);
  return x;
}

KElement<double> random_float_element(Rng& rng, Orientation lambda) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  KElement<double> x = KElement<double>::zero(lambda);
  for (double& c : x.coeffs) c = dist(rng);
  return x;
}

KElement<Rational> solve_constraint(KElement<Rational> x) {
  // f_K = -X0 X7 + λ(X1 X6 + X2 X5 + X3 X4); each real slot k pairs with 7 - k.
  for (int k = 0; k < 4; ++k) {
    if (is_zero(x[k])) continue;
    const int partner = 7 - k;
    x[partner] = 0;
    const Rational rest = constraint_f(x);
    // f_K is linear in X_partner with coefficient -X0 (k = 0) or λ X_k.
    Rational slope = k == 0 ? Rational(-x[0]) : Rational(lambda_value(x.lambda) * x[k]);
    x[partner] = -rest / slope;
    return x;
  }
  return x;
}

KElement<Rational> random_constrained_rational(Rng& rng, Orientation lambda) {
  return solve_constraint(random_rational_element(rng, lambda));
}

KElement<double> sample_s7(std::uint64_t seed, double rho, Orientation lambda) {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw ContractViolation("sample_s7 needs a finite radius > 0");
  }
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double l = lambda_value(lambda);
  const double f_tol = kSampleConstraintTol * std::max(1.0, rho * rho);
  const double n_tol = kSampleNormTol * std::max(1.0, rho);

  for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
    KElement<double> x = KElement<double>::zero(lambda);
    for (double& c : x.coeffs) c = normal(rng);

    // f_K = w . d with d = (X4, X5, X6, X7) and w = (λX3, λX2, λX1, -X0).
    const std::array<double, 4> w = {l * x[kEyEz], l * x[kEzEx], l * x[kExEy], -x[kUnit]};
    double ww = 0.0;
    for (double wi : w) ww += wi * wi;
    if (ww < 1e-12) continue;

    // Two projection passes push the residual to rounding level.
    for (int pass = 0; pass < 2; ++pass) {
      double wd = 0.0;
      for (int i = 0; i < 4; ++i) wd += w[static_cast<std::size_t>(i)] * x[kExEinf + i];
      const double t = wd / ww;
      for (int i = 0; i < 4; ++i) x[kExEinf + i] -= t * w[static_cast<std::size_t>(i)];
    }
    double dual_sq = 0.0;
    for (int i = kExEinf; i <= kI3Einf; ++i) dual_sq += x[i] * x[i];
    if (dual_sq < 1e-12) continue;

    const double scale = rho / std::sqrt(norm_a_squared(x));
    x *= scale;

    if (std::fabs(constraint_f(x)) <= f_tol && std::fabs(std::sqrt(norm_a_squared(x)) - rho) <= n_tol) {
      return x;
    }
  }
  throw std::runtime_error("sample_s7: no admissible draw after " + std::to_string(kSampleRetries) +
                           " attempts");
}

}  // namespace kappa
