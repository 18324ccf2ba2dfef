#pragma once

// Dense Cl(n,0), n <= 5, over a pluggable coefficient field.
//
// Generators are e_x, e_y, e_z, e_inf, e_5 on bits 0..4. Blades are stored in
// canonical (ascending-bit) order; a basis element written in another order,
// like e_z e_x, is a SignedBlade.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kappa/field.hpp"

namespace kappa {

inline constexpr int kMaxDim = 5;

struct Blade {
  std::uint32_t mask = 0;

  constexpr int grade() const { return std::popcount(mask); }
  friend constexpr bool operator==(Blade, Blade) = default;
};

struct SignedBlade {
  int sign = 1;
  Blade blade;

  friend constexpr bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

namespace blades {
inline constexpr Blade kScalar{0b0000};
inline constexpr Blade kX{0b0001};
inline constexpr Blade kY{0b0010};
inline constexpr Blade kZ{0b0100};
inline constexpr Blade kInf{0b1000};
inline constexpr Blade kXY{0b0011};
inline constexpr Blade kXZ{0b0101};
inline constexpr Blade kYZ{0b0110};
inline constexpr Blade kI3{0b0111};
inline constexpr Blade kI4{0b1111};
}  // namespace blades

/// Sign of moving the generators of b past those of a into canonical order.
constexpr int reorder_sign(std::uint32_t a, std::uint32_t b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Product of two canonical blades under positive signature (e_i^2 = +1).
constexpr SignedBlade blade_product(Blade a, Blade b) {
  return {reorder_sign(a.mask, b.mask), Blade{a.mask ^ b.mask}};
}

/// "e_x e_y", "e_x e_y e_z e_∞", "1".
std::string blade_label(Blade b);

template <Field T>
class Multivector {
 public:
  explicit Multivector(int dim) : dim_(check_dim(dim)), coeffs_(std::size_t{1} << dim, zero()) {}

  static Multivector scalar(int dim, const T& value) {
    Multivector m(dim);
    m.coeffs_[0] = value;
    return m;
  }

  static Multivector blade(int dim, Blade b, const T& value = FieldTraits<T>::from_int(1)) {
    Multivector m(dim);
    m.at(b) = value;
    return m;
  }

  static Multivector blade(int dim, SignedBlade b) {
    return blade(dim, b.blade, FieldTraits<T>::from_int(b.sign));
  }

  int dim() const { return dim_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const T> coeffs() const { return coeffs_; }

  const T& operator[](std::size_t mask) const { return coeffs_[mask]; }
  T& operator[](std::size_t mask) { return coeffs_[mask]; }
  const T& at(Blade b) const { return coeffs_.at(b.mask); }
  T& at(Blade b) { return coeffs_.at(b.mask); }

  bool is_zero() const {
    for (const T& c : coeffs_) {
      if (!kappa::is_zero(c)) return false;
    }
    return true;
  }

  Multivector& operator+=(const Multivector& rhs) {
    require_same_dim(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& rhs) {
    require_same_dim(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }
  Multivector& operator*=(const T& s) {
    for (T& c : coeffs_) c *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) {
    for (T& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

  void require_same_dim(const Multivector& rhs) const {
    if (rhs.dim_ != dim_) {
      throw ContractViolation("multivector dimension mismatch: " + std::to_string(dim_) +
                              " vs " + std::to_string(rhs.dim_));
    }
  }

 private:
  static T zero() { return FieldTraits<T>::from_int(0); }
  static int check_dim(int dim) {
    if (dim < 0 || dim > kMaxDim) {
      throw ContractViolation("Cl(n,0) supports 0 <= n <= 5, got " + std::to_string(dim));
    }
    return dim;
  }

  int dim_;
  std::vector<T> coeffs_;
};

/// Bilinear extension of blade_product. Zero coefficients are skipped.
template <Field T>
Multivector<T> geometric_product(const Multivector<T>& x, const Multivector<T>& y) {
  x.require_same_dim(y);
  Multivector<T> z(x.dim());
  const std::size_t n = x.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (is_zero(x[a])) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (is_zero(y[b])) continue;
      const T term = x[a] * y[b];
      if (reorder_sign(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)) > 0) {
        z[a ^ b] += term;
      } else {
        z[a ^ b] -= term;
      }
    }
  }
  return z;
}

/// Sign applied to grade k under reversal: (-1)^(k(k-1)/2).
constexpr int reverse_sign(int grade) { return ((grade * (grade - 1) / 2) & 1) ? -1 : 1; }

template <Field T>
Multivector<T> reverse(Multivector<T> x) {
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (reverse_sign(std::popcount(m)) < 0) x[m] = -x[m];
  }
  return x;
}

template <Field T>
Multivector<T> grade_project(const Multivector<T>& x, int k) {
  if (k < 0 || k > x.dim()) {
    throw ContractViolation("grade " + std::to_string(k) + " out of range for Cl(" +
                            std::to_string(x.dim()) + ",0)");
  }
  Multivector<T> out(x.dim());
  for (std::size_t m = 0; m < x.size(); ++m) {
    if (std::popcount(m) == k) out[m] = x[m];
  }
  return out;
}

/// (XY + YX) / 2
template <Field T>
Multivector<T> inner(const Multivector<T>& x, const Multivector<T>& y) {
  return (geometric_product(x, y) + geometric_product(y, x)) * FieldTraits<T>::from_ratio(1, 2);
}

/// (XY - YX) / 2
template <Field T>
Multivector<T> outer(const Multivector<T>& x, const Multivector<T>& y) {
  return (geometric_product(x, y) - geometric_product(y, x)) * FieldTraits<T>::from_ratio(1, 2);
}

template <Field T>
bool has_odd_part(const Multivector<T>& x) {
  for (std::size_t m = 0; m < x.size(); ++m) {
    if ((std::popcount(m) & 1) && !is_zero(x[m])) return true;
  }
  return false;
}

/// Even-grade blades of Cl(n,0), 1 <= n <= 4. Bivectors follow the cyclic
/// naming e_x e_y, e_z e_x, e_y e_z (so e_z e_x carries sign -1 against the
/// canonical e_x e_z); for n = 4 the order is
/// 1, e_xy, e_zx, e_yz, e_x e_inf, e_y e_inf, e_z e_inf, I3 e_inf.
std::vector<SignedBlade> even_basis(int n);

struct IsomorphismReport {
  int n = 0;
  std::string expected;  // "R", "C" or "H"
  bool match = false;
  std::vector<std::string> witnesses;
  std::vector<std::string> mismatches;
};

/// Compares the even subalgebra's structure constants against R, C or H.
IsomorphismReport check_division_tower(int n);

}  // namespace kappa
