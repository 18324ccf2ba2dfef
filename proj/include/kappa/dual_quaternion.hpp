#pragma once

// K^λ as pairs of quaternions, Q = q_r + q_d ε.
//
// Both quaternions live on the basis [1, λe_xe_y, λe_ze_x, λe_ye_z]. With
// that basis, i j = λ k, and the dual part of X is (-X7, λX6, λX5, λX4). For
// λ = +1 this is the familiar (-X7, X6, X5, X4); for λ = -1 the sign of the
// bivector slots flips, which is what Q = q_r + q_d ε in Cl(4,0) demands.

#include <array>

#include "kappa/kelement.hpp"

namespace kappa {

template <Field T>
struct Quaternion {
  Orientation lambda = Orientation::Positive;
  std::array<T, 4> q{};

  const T& operator[](int k) const { return q[static_cast<std::size_t>(k)]; }
  T& operator[](int k) { return q[static_cast<std::size_t>(k)]; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  friend Quaternion operator+(Quaternion a, const Quaternion& b) {
    if (a.lambda != b.lambda) throw ContractViolation("quaternion orientation mismatch");
    for (std::size_t i = 0; i < 4; ++i) a.q[i] += b.q[i];
    return a;
  }
};

template <Field T>
Quaternion<T> qconj(Quaternion<T> a) {
  for (int k = 1; k < 4; ++k) a[k] = -a[k];
  return a;
}

template <Field T>
T qnormsq(const Quaternion<T>& a) {
  return T(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3]);
}

/// Hamilton product with the vector cross term weighted by λ.
template <Field T>
Quaternion<T> qmul(const Quaternion<T>& a, const Quaternion<T>& b) {
  if (a.lambda != b.lambda) throw ContractViolation("quaternion orientation mismatch");
  Quaternion<T> c;
  c.lambda = a.lambda;
  T cx = a[2] * b[3] - a[3] * b[2];
  T cy = a[3] * b[1] - a[1] * b[3];
  T cz = a[1] * b[2] - a[2] * b[1];
  if (a.lambda == Orientation::Negative) {
    cx = -cx;
    cy = -cy;
    cz = -cz;
  }
  c[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  c[1] = a[0] * b[1] + a[1] * b[0] + cx;
  c[2] = a[0] * b[2] + a[2] * b[0] + cy;
  c[3] = a[0] * b[3] + a[3] * b[0] + cz;
  return c;
}

/// The quaternion as a K^λ element on basis indices 0..3.
template <Field T>
KElement<T> to_kelement(const Quaternion<T>& a) {
  KElement<T> x = KElement<T>::zero(a.lambda);
  for (int k = 0; k < 4; ++k) x[k] = a[k];
  return x;
}

template <Field T>
struct DualQuatView {
  Quaternion<T> real;
  Quaternion<T> dual;
  Orientation lambda = Orientation::Positive;

  friend bool operator==(const DualQuatView&, const DualQuatView&) = default;
};

template <Field T>
DualQuatView<T> to_dual_quaternion(const KElement<T>& x) {
  DualQuatView<T> v;
  v.lambda = x.lambda;
  v.real.lambda = x.lambda;
  v.dual.lambda = x.lambda;
  for (int k = 0; k < 4; ++k) v.real[k] = x[k];
  const bool flip = x.lambda == Orientation::Negative;
  v.dual[0] = -x[kI3Einf];
  v.dual[1] = flip ? T(-x[kEzEinf]) : x[kEzEinf];
  v.dual[2] = flip ? T(-x[kEyEinf]) : x[kEyEinf];
  v.dual[3] = flip ? T(-x[kExEinf]) : x[kExEinf];
  return v;
}

template <Field T>
KElement<T> from_dual_quaternion(const Quaternion<T>& real, const Quaternion<T>& dual,
                                 Orientation lambda) {
  if (real.lambda != lambda || dual.lambda != lambda) {
    throw ContractViolation("quaternion orientation mismatch");
  }
  KElement<T> x = KElement<T>::zero(lambda);
  for (int k = 0; k < 4; ++k) x[k] = real[k];
  const bool flip = lambda == Orientation::Negative;
  x[kI3Einf] = -dual[0];
  x[kEzEinf] = flip ? T(-dual[1]) : dual[1];
  x[kEyEinf] = flip ? T(-dual[2]) : dual[2];
  x[kExEinf] = flip ? T(-dual[3]) : dual[3];
  return x;
}

template <Field T>
KElement<T> from_dual_quaternion(const DualQuatView<T>& v) {
  return from_dual_quaternion(v.real, v.dual, v.lambda);
}

/// q_r + q_d ε evaluated by geometric products in Cl(4,0), independent of the
/// coefficient map above.
template <Field T>
KElement<T> compose_in_cl40(const Quaternion<T>& real, const Quaternion<T>& dual,
                            Orientation lambda) {
  const Multivector<T> r = embed_to_cl40(to_kelement(real));
  const Multivector<T> d = embed_to_cl40(to_kelement(dual));
  const Multivector<T> eps = embed_to_cl40(epsilon<T>(lambda));
  return from_cl40(r + geometric_product(d, eps), lambda);
}

/// (r1 + d1 ε)(r2 + d2 ε) = (r1 r2 + d1 d2) + (r1 d2 + d1 r2) ε
template <Field T>
DualQuatView<T> dq_product(const DualQuatView<T>& a, const DualQuatView<T>& b) {
  DualQuatView<T> c;
  c.lambda = a.lambda;
  c.real = qmul(a.real, b.real) + qmul(a.dual, b.dual);
  c.dual = qmul(a.real, b.dual) + qmul(a.dual, b.real);
  return c;
}

}  // namespace kappa
