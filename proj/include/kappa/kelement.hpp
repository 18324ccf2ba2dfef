#pragma once

#include <array>

#include "kappa/clifford.hpp"
#include "kappa/structure_table.hpp"

namespace kappa {

/// X = X0 + X1 λe_xe_y + X2 λe_ze_x + X3 λe_ye_z + X4 λe_xe_∞ + X5 λe_ye_∞
///       + X6 λe_ze_∞ + X7 λI₃e_∞
template <Field T>
struct KElement {
  Orientation lambda = Orientation::Positive;
  std::array<T, kBasisSize> coeffs{};

  static KElement zero(Orientation lambda) {
    KElement x;
    x.lambda = lambda;
    x.coeffs.fill(FieldTraits<T>::from_int(0));
    return x;
  }
  static KElement identity(Orientation lambda) { return basis(kUnit, lambda); }
  static KElement basis(int k, Orientation lambda, const T& value = FieldTraits<T>::from_int(1)) {
    KElement x = zero(lambda);
    x.coeffs.at(static_cast<std::size_t>(k)) = value;
    return x;
  }

  const T& operator[](int k) const { return coeffs[static_cast<std::size_t>(k)]; }
  T& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }

  bool is_zero() const {
    for (const T& c : coeffs) {
      if (!kappa::is_zero(c)) return false;
    }
    return true;
  }

  KElement& operator+=(const KElement& rhs) {
    require_same_orientation(rhs);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
    return *this;
  }
  KElement& operator-=(const KElement& rhs) {
    require_same_orientation(rhs);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
    return *this;
  }
  KElement& operator*=(const T& s) {
    for (T& c : coeffs) c *= s;
    return *this;
  }
  friend KElement operator+(KElement a, const KElement& b) { return a += b; }
  friend KElement operator-(KElement a, const KElement& b) { return a -= b; }
  friend KElement operator*(KElement a, const T& s) { return a *= s; }
  friend KElement operator*(const T& s, KElement a) { return a *= s; }
  friend bool operator==(const KElement& a, const KElement& b) {
    return a.lambda == b.lambda && a.coeffs == b.coeffs;
  }

  void require_same_orientation(const KElement& rhs) const {
    if (rhs.lambda != lambda) throw ContractViolation("K^λ orientation mismatch");
  }
};

/// ε = -λI₃e_∞ has coefficient -1 on basis element 7 for either orientation.
template <Field T>
KElement<T> epsilon(Orientation lambda) {
  return KElement<T>::basis(kI3Einf, lambda, FieldTraits<T>::from_int(-1));
}

template <Field T>
Multivector<T> embed_to_cl40(const KElement<T>& x) {
  Multivector<T> m(4);
  const int l = lambda_value(x.lambda);
  for (int k = 0; k < kBasisSize; ++k) {
    const SignedBlade b = kappa_blade(k);
    const int weight = b.sign * (k == kUnit ? 1 : l);
    m.at(b.blade) = weight > 0 ? x[k] : T(-x[k]);
  }
  return m;
}

/// Inverse of embed_to_cl40. Throws ContractViolation if m has odd-grade parts.
template <Field T>
KElement<T> from_cl40(const Multivector<T>& m, Orientation lambda) {
  if (m.dim() != 4) throw ContractViolation("from_cl40 expects a Cl(4,0) multivector");
  if (has_odd_part(m)) throw ContractViolation("multivector is not in the even subalgebra");
  KElement<T> x = KElement<T>::zero(lambda);
  const int l = lambda_value(lambda);
  for (int k = 0; k < kBasisSize; ++k) {
    const SignedBlade b = kappa_blade(k);
    const int weight = b.sign * (k == kUnit ? 1 : l);
    x[k] = weight > 0 ? m.at(b.blade) : T(-m.at(b.blade));
  }
  return x;
}

/// Table-driven product using the transcribed multiplication table.
template <Field T>
KElement<T> kproduct(const KElement<T>& x, const KElement<T>& y) {
  x.require_same_orientation(y);
  const StructureTable& table = transcribed_table(x.lambda);
  KElement<T> z = KElement<T>::zero(x.lambda);
  for (int i = 0; i < kBasisSize; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < kBasisSize; ++j) {
      if (is_zero(y[j])) continue;
      const T term = x[i] * y[j];
      T& slot = z[table.at(i, j).index];
      if (table.effective_sign(i, j) > 0) {
        slot += term;
      } else {
        slot -= term;
      }
    }
  }
  return z;
}

/// Grade-2 coefficients (X1..X6) flip sign; X0 and X7 are fixed.
template <Field T>
KElement<T> reverse_k(KElement<T> x) {
  for (int k = kExEy; k <= kEzEinf; ++k) x[k] = -x[k];
  return x;
}

}  // namespace kappa
