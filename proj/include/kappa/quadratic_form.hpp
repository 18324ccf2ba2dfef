#pragma once

// The quadratic form Q(X) = X X† on K^λ, its split-complex value type, and
// the two norms built from it.

#include <algorithm>
#include <variant>

#include "kappa/kelement.hpp"

namespace kappa {

/// s + p ε with ε² = +1.
template <Field T>
struct SplitScalar {
  T s{};
  T p{};

  friend bool operator==(const SplitScalar&, const SplitScalar&) = default;
};

template <Field T>
SplitScalar<T> split_mul(const SplitScalar<T>& a, const SplitScalar<T>& b) {
  return {T(a.s * b.s + a.p * b.p), T(a.s * b.p + a.p * b.s)};
}

/// ε ≡ -λI₃e_∞: a coefficient c on basis element λI₃e_∞ is an ε part of -c.
/// In raw Cl(4,0) terms, with b the coefficient on e_xe_ye_ze_∞, p = -λ·b.
template <Field T>
T epsilon_part_from_top(const T& top_coefficient) {
  return T(-top_coefficient);
}

template <Field T>
T top_from_epsilon_part(const T& eps_part) {
  return T(-eps_part);
}

template <Field T>
KElement<T> from_split(const SplitScalar<T>& v, Orientation lambda) {
  KElement<T> x = KElement<T>::zero(lambda);
  x[kUnit] = v.s;
  x[kI3Einf] = top_from_epsilon_part(v.p);
  return x;
}

/// Relative bound on the bivector part of X X† in float mode, where it should
/// vanish analytically.
inline constexpr double kSpanTolerance = 1e-12;

/// Reads v as s + p ε. Throws InternalError if any bivector coefficient is
/// nonzero (exact) or above kSpanTolerance relative to `scale` (float).
template <Field T>
SplitScalar<T> as_split_scalar(const KElement<T>& v, double scale = 1.0) {
  for (int k = kExEy; k <= kEzEinf; ++k) {
    const bool vanishes = FieldTraits<T>::exact
                              ? is_zero(v[k])
                              : magnitude(v[k]) <= kSpanTolerance * std::max(1.0, scale);
    if (!vanishes) {
      throw InternalError("X X† has a bivector component on basis " + std::to_string(k) +
                          ": " + FieldTraits<T>::format(v[k]));
    }
  }
  return {v[kUnit], epsilon_part_from_top(v[kI3Einf])};
}

template <Field T>
T norm_a_squared(const KElement<T>& x) {
  T sum = FieldTraits<T>::from_int(0);
  for (const T& c : x.coeffs) sum += c * c;
  return sum;
}

template <Field T>
SplitScalar<T> qform(const KElement<T>& x) {
  const KElement<T> prod = kproduct(x, reverse_k(x));
  return as_split_scalar(prod, FieldTraits<T>::to_double(norm_a_squared(x)));
}

/// √(Σ X_μ²). For rationals the square root must be exact.
template <Field T>
T norm_a(const KElement<T>& x) {
  return field_sqrt(norm_a_squared(x));
}

/// -X0X7 + λ(X1X6 + X2X5 + X3X4)
template <Field T>
T constraint_f(const KElement<T>& x) {
  T paired = x[kExEy] * x[kEzEinf] + x[kEzEx] * x[kEyEinf] + x[kEyEz] * x[kExEinf];
  if (x.lambda == Orientation::Negative) paired = -paired;
  return T(paired - x[kUnit] * x[kI3Einf]);
}

/// Why norm (b) is undefined: X X† still has an ε part.
template <Field T>
struct SplitResidual {
  SplitScalar<T> form;
};

template <Field T>
using NormResult = std::variant<T, SplitResidual<T>>;

/// Scalar part of X X† when its ε part is within tol (exactly zero for
/// rationals); otherwise the full split value.
template <Field T>
NormResult<T> norm_b_squared(const KElement<T>& x, double tol = 0.0) {
  SplitScalar<T> q = qform(x);
  const bool scalar = FieldTraits<T>::exact ? is_zero(q.p) : magnitude(q.p) <= tol;
  if (!scalar) return SplitResidual<T>{q};
  return q.s;
}

template <Field T>
NormResult<T> norm_b(const KElement<T>& x, double tol = 0.0) {
  NormResult<T> sq = norm_b_squared(x, tol);
  if (const T* v = std::get_if<T>(&sq)) return field_sqrt(*v);
  return sq;
}

}  // namespace kappa
