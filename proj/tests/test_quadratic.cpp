#include <cmath>
#include <random>

#include "doctest.h"
#include "kappa/quadratic_form.hpp"

using namespace kappa;
using R = Rational;

namespace {

constexpr Orientation kBoth[] = {Orientation::Positive, Orientation::Negative};

KElement<R> random_k(std::mt19937_64& rng, Orientation l) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  KElement<R> x = KElement<R>::zero(l);
  for (auto& c : x.coeffs) c = FieldTraits<R>::from_ratio(num(rng), den(rng));
  return x;
}

}  // namespace

TEST_CASE("split-complex product") {
  using S = SplitScalar<R>;
  CHECK(split_mul(S{1, 0}, S{5, -3}) == S{5, -3});
  CHECK(split_mul(S{1, 1}, S{1, -1}) == S{0, 0});
  CHECK(split_mul(S{2, 1}, S{3, 2}) == S{8, 7});
}

TEST_CASE("qform of simple elements") {
  for (Orientation l : kBoth) {
    CHECK(qform(KElement<R>::identity(l)) == SplitScalar<R>{1, 0});
    CHECK(qform(KElement<R>::basis(kI3Einf, l)) == SplitScalar<R>{1, 0});
    // 1 + ε: X0 = 1, X7 = -1.
    auto x = KElement<R>::identity(l) + epsilon<R>(l);
    CHECK(qform(x) == SplitScalar<R>{2, 2});
  }
  // X0 = X7 = 1/√2 gives ε part -2 X0 X7 = -1.
  KElement<double> y = KElement<double>::zero(Orientation::Positive);
  y[kUnit] = y[kI3Einf] = std::sqrt(0.5);
  const SplitScalar<double> q = qform(y);
  CHECK(q.s == doctest::Approx(1.0));
  CHECK(q.p == doctest::Approx(-1.0));
}

TEST_CASE("qform equals the closed form on random elements") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const Orientation l = kBoth[t % 2];
    const auto x = random_k(rng, l);
    const SplitScalar<R> q = qform(x);
    CHECK(q.s == norm_a_squared(x));
    CHECK(q.p == R(2) * constraint_f(x));
    // Routed through the raw Cl(4,0) product: p = -λ times the e_xe_ye_ze_∞ coefficient.
    const auto m = geometric_product(embed_to_cl40(x), reverse(embed_to_cl40(x)));
    CHECK(q.p == R(-lambda_value(l)) * m.at(blades::kI4));
    CHECK(q.s == m.at(blades::kScalar));
  }
}

TEST_CASE("composition law without constraint") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 1000; ++t) {
    const Orientation l = kBoth[t % 2];
    const auto x = random_k(rng, l), y = random_k(rng, l);
    CHECK(qform(kproduct(x, y)) == split_mul(qform(x), qform(y)));
  }
}

TEST_CASE("norms") {
  const auto P = Orientation::Positive;
  auto x = KElement<R>::zero(P);
  x[kUnit] = R(3, 5);
  x[kExEy] = R(4, 5);
  CHECK(norm_a(x) == 1);
  CHECK(std::get<R>(norm_b(x)) == 1);
  x[kExEy] = 1;
  CHECK_THROWS_AS(norm_a(x), ContractViolation);
  CHECK(norm_a_squared(x) == R(34, 25));

  auto z = KElement<R>::identity(P) + epsilon<R>(P);
  const auto nb = norm_b(z);
  REQUIRE(std::holds_alternative<SplitResidual<R>>(nb));
  CHECK(std::get<SplitResidual<R>>(nb).form == SplitScalar<R>{2, 2});
  CHECK(constraint_f(z) == 1);
}

TEST_CASE("constraint function") {
  for (Orientation l : kBoth) {
    const R lv = lambda_value(l);
    auto x = KElement<R>::zero(l);
    for (int k = 0; k < 8; ++k) x[k] = k + 1;
    CHECK(constraint_f(x) == R(-1 * 8) + lv * R(2 * 7 + 3 * 6 + 4 * 5));
  }
}

TEST_CASE("float norm (b) tolerance") {
  auto x = KElement<double>::identity(Orientation::Positive);
  x[kI3Einf] = 1e-13;
  CHECK(std::holds_alternative<double>(norm_b(x, 1e-10)));
  CHECK(std::holds_alternative<SplitResidual<double>>(norm_b(x, 0.0)));
}

TEST_CASE("as_split_scalar rejects bivector parts") {
  auto v = KElement<R>::basis(kExEy, Orientation::Positive);
  CHECK_THROWS_AS(as_split_scalar(v), InternalError);
  CHECK(as_split_scalar(epsilon<R>(Orientation::Negative)) == SplitScalar<R>{0, 1});
}

TEST_CASE("norms and constraint of (1 ± ε)/√2") {
  const double r = std::sqrt(0.5);
  for (Orientation l : kBoth) {
    CHECK(norm_a(KElement<R>::zero(l)) == 0);
    for (int k = 0; k < 8; ++k) {
      CHECK(norm_a(KElement<R>::basis(k, l)) == 1);
      CHECK(std::get<R>(norm_b(KElement<R>::basis(k, l))) == 1);
      CHECK(constraint_f(KElement<R>::basis(k, l)) == 0);
    }
    const auto plus = (KElement<double>::identity(l) + epsilon<double>(l)) * r;
    CHECK(norm_a(plus) == doctest::Approx(1.0));
    const auto nb = norm_b(plus, 1e-10);
    REQUIRE(std::holds_alternative<SplitResidual<double>>(nb));
    CHECK(std::get<SplitResidual<double>>(nb).form.p == doctest::Approx(1.0));
    CHECK(constraint_f(plus) == doctest::Approx(0.5));

    auto equal = KElement<double>::zero(l);
    equal[kUnit] = equal[kI3Einf] = r;
    CHECK(constraint_f(equal) == doctest::Approx(-0.5));
  }
}

TEST_CASE("constrained elements have a scalar quadratic form") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    const Orientation l = kBoth[t % 2];
    auto x = random_k(rng, l);
    // Re-solve X7 from X0 so that f_K = 0.
    if (x[kUnit] == 0) continue;
    x[kI3Einf] = 0;
    x[kI3Einf] = constraint_f(x) / x[kUnit];
    REQUIRE(constraint_f(x) == 0);
    CHECK(qform(x) == SplitScalar<R>{norm_a_squared(x), 0});
  }
}
