#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "kappa/clifford.hpp"

using namespace kappa;

namespace {

// Sign of e_A e_B by writing out both generator lists, bubble sorting, and
// cancelling squared generators (all square to +1).
std::pair<int, unsigned> brute_product(unsigned a, unsigned b, int n) {
  std::vector<int> word;
  for (int i = 0; i < n; ++i) {
    if (a >> i & 1) word.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    if (b >> i & 1) word.push_back(i);
  }
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        sign = -sign;
      }
    }
  }
  unsigned mask = 0;
  for (int g : word) mask ^= 1u << g;
  return {sign, mask};
}

Multivector<Rational> random_mv(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Multivector<Rational> m(dim);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = FieldTraits<Rational>::from_ratio(num(rng), den(rng));
  return m;
}

Multivector<Rational> vec(Rational x, Rational y, Rational z, Rational w) {
  Multivector<Rational> m(4);
  m.at(blades::kX) = x;
  m.at(blades::kY) = y;
  m.at(blades::kZ) = z;
  m.at(blades::kInf) = w;
  return m;
}

}  // namespace

TEST_CASE("blade sign matches brute-force reordering") {
  for (int n = 1; n <= 5; ++n) {
    for (unsigned a = 0; a < (1u << n); ++a) {
      for (unsigned b = 0; b < (1u << n); ++b) {
        const auto [sign, mask] = brute_product(a, b, n);
        const SignedBlade p = blade_product(Blade{a}, Blade{b});
        CHECK(p.sign == sign);
        CHECK(p.blade.mask == mask);
      }
    }
  }
}

TEST_CASE("geometric product is associative (exact, 10000 triples)") {
  std::mt19937_64 rng(11);
  int bad = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto a = random_mv(rng, 4), b = random_mv(rng, 4), c = random_mv(rng, 4);
    if (geometric_product(geometric_product(a, b), c) != geometric_product(a, geometric_product(b, c))) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("geometric product is associative in floating point") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 1000; ++t) {
    Multivector<double> a(5), b(5), c(5);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
      c[i] = u(rng);
    }
    const auto lhs = geometric_product(geometric_product(a, b), c);
    const auto rhs = geometric_product(a, geometric_product(b, c));
    double scale = 0.0;
    for (const auto* m : {&lhs, &rhs}) {
      for (double v : m->coeffs()) scale = std::max(scale, std::fabs(v));
    }
    const auto d = lhs - rhs;
    for (double v : d.coeffs()) REQUIRE(std::fabs(v) <= 1e-12 * (1.0 + scale));
  }
}

TEST_CASE("reverse is an anti-automorphism") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    const auto a = random_mv(rng, 4), b = random_mv(rng, 4);
    CHECK(reverse(geometric_product(a, b)) == geometric_product(reverse(b), reverse(a)));
  }
  CHECK(reverse_sign(0) == 1);
  CHECK(reverse_sign(1) == 1);
  CHECK(reverse_sign(2) == -1);
  CHECK(reverse_sign(3) == -1);
  CHECK(reverse_sign(4) == 1);
}

TEST_CASE("even part is closed under the product") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    auto a = random_mv(rng, 4), b = random_mv(rng, 4);
    for (int k : {1, 3}) {
      a -= grade_project(a, k);
      b -= grade_project(b, k);
    }
    CHECK_FALSE(has_odd_part(geometric_product(a, b)));
  }
}

TEST_CASE("vector product splits into inner and outer parts") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const auto a = vec(d(rng), d(rng), d(rng), d(rng));
    const auto b = vec(d(rng), d(rng), d(rng), d(rng));
    const auto ab = geometric_product(a, b);
    CHECK(ab == inner(a, b) + outer(a, b));
    Rational dot = 0;
    for (Blade g : {blades::kX, blades::kY, blades::kZ, blades::kInf}) dot += a.at(g) * b.at(g);
    CHECK(inner(a, b) == Multivector<Rational>::scalar(4, dot));
    CHECK(outer(a, b) == grade_project(ab, 2));
    CHECK(outer(a, a).is_zero());
  }
}

TEST_CASE("pseudoscalars and generators square as expected") {
  const auto one = Multivector<Rational>::scalar(4, 1);
  const auto i4 = Multivector<Rational>::blade(4, blades::kI4);
  const auto i3 = Multivector<Rational>::blade(4, blades::kI3);
  const auto inf = Multivector<Rational>::blade(4, blades::kInf);
  CHECK(geometric_product(i4, i4) == one);
  CHECK(geometric_product(i3, i3) == -one);
  CHECK(geometric_product(inf, inf) == one);
  CHECK(geometric_product(i3, inf) == i4);
  CHECK(blade_label(blades::kI4) == "e_x e_y e_z e_∞");
}

TEST_CASE("grade projection") {
  std::mt19937_64 rng(16);
  const auto a = random_mv(rng, 4);
  Multivector<Rational> sum(4);
  for (int k = 0; k <= 4; ++k) sum += grade_project(a, k);
  CHECK(sum == a);
  CHECK_THROWS_AS(grade_project(a, 5), ContractViolation);
  CHECK_THROWS_AS(grade_project(a, -1), ContractViolation);
  CHECK_THROWS_AS(Multivector<Rational>(6), ContractViolation);
  CHECK_THROWS_AS(a + Multivector<Rational>(3), ContractViolation);
}

TEST_CASE("even bases") {
  CHECK(even_basis(1).size() == 1);
  CHECK(even_basis(2).size() == 2);
  CHECK(even_basis(3).size() == 4);
  const auto b4 = even_basis(4);
  REQUIRE(b4.size() == 8);
  CHECK(b4[2].blade == blades::kXZ);
  CHECK(b4[2].sign == -1);
  CHECK(b4[7].blade == blades::kI4);
  CHECK_THROWS(even_basis(5));
}

TEST_CASE("division tower") {
  for (int n = 1; n <= 3; ++n) {
    const IsomorphismReport r = check_division_tower(n);
    CHECK(r.match);
    CHECK(r.mismatches.empty());
  }
  CHECK(check_division_tower(1).expected == "R");
  CHECK(check_division_tower(2).expected == "C");
  CHECK(check_division_tower(3).expected == "H");
}

TEST_CASE("small products") {
  using namespace blades;
  CHECK(blade_product(kX, kX) == SignedBlade{1, kScalar});
  CHECK(blade_product(kX, kY) == SignedBlade{1, kXY});
  CHECK(blade_product(kY, kX) == SignedBlade{-1, kXY});
  // e_xe_y e_ye_z = e_xe_z = -e_ze_x
  CHECK(blade_product(kXY, kYZ) == SignedBlade{1, kXZ});
  CHECK(blade_product(kXY, kXY) == SignedBlade{-1, kScalar});
  CHECK(blade_product(kI4, kI4) == SignedBlade{1, kScalar});

  const auto one = Multivector<Rational>::scalar(4, 1);
  const auto exy = Multivector<Rational>::blade(4, kXY);
  const auto ex = Multivector<Rational>::blade(4, kX);
  const auto ey = Multivector<Rational>::blade(4, kY);
  CHECK(reverse(exy) == -exy);
  CHECK(reverse(Multivector<Rational>::blade(4, kI4)) == Multivector<Rational>::blade(4, kI4));
  CHECK(reverse(Multivector<Rational>::scalar(4, 3)) == Multivector<Rational>::scalar(4, 3));
  CHECK(grade_project(one + exy, 0) == one);
  CHECK(grade_project(one + exy, 2) == exy);
  CHECK(inner(ex, ey).is_zero());
  CHECK(inner(ex, ex) == one);
  CHECK(outer(ex, ex).is_zero());
}

TEST_CASE("even basis blades multiply within the even part") {
  const auto basis = even_basis(4);
  for (const SignedBlade& a : basis) {
    for (const SignedBlade& b : basis) {
      CHECK(blade_product(a.blade, b.blade).blade.grade() % 2 == 0);
    }
  }
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    Multivector<Rational> x(4);
    std::uniform_int_distribution<long> d(-9, 9);
    for (const SignedBlade& b : basis) x.at(b.blade) = d(rng);
    CHECK(grade_project(x, 1).is_zero());
    CHECK(grade_project(x, 3).is_zero());
  }
}
