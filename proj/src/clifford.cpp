#include "kappa/clifford.hpp"

#include <array>

namespace kappa {

std::string blade_label(Blade b) {
  static constexpr std::array<const char*, kMaxDim> kNames = {"e_x", "e_y", "e_z", "e_∞", "e_5"};
  if (b.mask == 0) return "1";
  std::string out;
  for (int i = 0; i < kMaxDim; ++i) {
    if (b.mask & (1u << i)) {
      if (!out.empty()) out += ' ';
      out += kNames[i];
    }
  }
  return out;
}

std::vector<SignedBlade> even_basis(int n) {
  using namespace blades;
  switch (n) {
    case 1:
      return {{1, kScalar}};
    case 2:
      return {{1, kScalar}, {1, kXY}};
    case 3:
      return {{1, kScalar}, {1, kXY}, {-1, kXZ}, {1, kYZ}};
    case 4:
      return {{1, kScalar},
              {1, kXY},
              {-1, kXZ},
              {1, kYZ},
              {1, Blade{kX.mask | kInf.mask}},
              {1, Blade{kY.mask | kInf.mask}},
              {1, Blade{kZ.mask | kInf.mask}},
              {1, kI4}};
    default:
      throw ContractViolation("even_basis is defined for 1 <= n <= 4, got " + std::to_string(n));
  }
}

namespace {

std::string signed_label(int sign, const std::string& name) {
  return (sign < 0 ? "-" : "") + name;
}

// Reference structure constants for R, C, H on the basis {1, i, j, k} truncated
// to the algebra's dimension: product[a][b] = sign * basis[index].
struct RefEntry {
  int sign;
  int index;
};

constexpr std::array<std::array<RefEntry, 4>, 4> kHamilton = {{
    {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
    {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
    {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
    {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
}};

}  // namespace

IsomorphismReport check_division_tower(int n) {
  if (n < 1 || n > 3) {
    throw ContractViolation("division tower is checked for n in {1, 2, 3}, got " +
                            std::to_string(n));
  }
  IsomorphismReport report;
  report.n = n;
  report.expected = n == 1 ? "R" : (n == 2 ? "C" : "H");

  const std::vector<SignedBlade> basis = even_basis(n);
  const std::size_t dim = basis.size();  // 1, 2 or 4
  static constexpr std::array<const char*, 4> kUnit = {"1", "i", "j", "k"};

  std::vector<std::string> names;
  for (const SignedBlade& b : basis) {
    // Print e_z e_x rather than -e_x e_z.
    if (b.blade == blades::kXZ && b.sign < 0) {
      names.push_back("e_z e_x");
    } else {
      names.push_back(signed_label(b.sign, blade_label(b.blade)));
    }
  }

  bool ok = true;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const auto lhs = Multivector<Rational>::blade(n, basis[a]);
      const auto rhs = Multivector<Rational>::blade(n, basis[b]);
      const Multivector<Rational> prod = geometric_product(lhs, rhs);
      const RefEntry ref = kHamilton[a][b];
      const Multivector<Rational> expected =
          Multivector<Rational>::blade(n, basis[static_cast<std::size_t>(ref.index)]) *
          Rational(ref.sign);
      if (prod != expected) {
        ok = false;
        report.mismatches.push_back(names[a] + " * " + names[b] + " != " +
                                    signed_label(ref.sign, names[static_cast<std::size_t>(ref.index)]));
      }
    }
  }

  for (std::size_t a = 1; a < dim; ++a) {
    report.witnesses.push_back(std::string(kUnit[a]) + " = " + names[a]);
  }
  if (n == 2) report.witnesses.push_back("(e_x e_y)^2 = -1");
  if (n == 3) {
    const auto i = Multivector<Rational>::blade(3, basis[1]);
    const auto j = Multivector<Rational>::blade(3, basis[2]);
    const auto k = Multivector<Rational>::blade(3, basis[3]);
    const Multivector<Rational> ijk = geometric_product(geometric_product(i, j), k);
    const bool ijk_ok = ijk == Multivector<Rational>::scalar(3, Rational(-1));
    ok = ok && ijk_ok;
    report.witnesses.push_back(std::string("i^2 = j^2 = k^2 = ijk = -1") + (ijk_ok ? "" : " (FAILED)"));
  }
  report.match = ok;
  return report;
}

}  // namespace kappa
