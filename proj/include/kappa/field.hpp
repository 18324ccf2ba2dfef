#pragma once

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kappa {

/// Exact rational coefficients (GMP-backed, always canonical).
using Rational = mpq_class;

/// Thrown when an operation's preconditions are violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when an identity the algebra guarantees fails to hold; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A coefficient string that could not be read as a number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class FieldMode { Rational, Float };

std::string_view to_string(FieldMode mode);

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr FieldMode mode = FieldMode::Float;
  static double parse(std::string_view text);
  /// Shortest decimal that round-trips.
  static std::string format(double value);
  static double to_double(double value) { return value; }
  static double from_int(long value) { return static_cast<double>(value); }
  static double from_ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static std::optional<double> sqrt(double value) {
    if (value < 0.0) return std::nullopt;
    return std::sqrt(value);
  }
};

template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr FieldMode mode = FieldMode::Rational;
  /// Accepts "p/q", integers, and finite decimals with optional exponent
  /// ("0.25", "-1.5e-3"); decimals convert exactly.
  static Rational parse(std::string_view text);
  /// Canonical "p/q", or "p" when the denominator is one.
  static std::string format(const Rational& value);
  static double to_double(const Rational& value) { return value.get_d(); }
  static Rational from_int(long value) { return Rational(value); }
  static Rational from_ratio(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  /// Exact square root when the value is a perfect rational square.
  static std::optional<Rational> sqrt(const Rational& value);
};

template <class T>
concept Field = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { FieldTraits<T>::format(a) } -> std::same_as<std::string>;
};

template <Field T>
bool is_zero(const T& value) {
  return value == FieldTraits<T>::from_int(0);
}

/// |value| as a double; used for residual reporting.
template <Field T>
double magnitude(const T& value) {
  return std::fabs(FieldTraits<T>::to_double(value));
}

/// Square root that must be representable in the field. Throws
/// ContractViolation for negative inputs and for rationals that are not
/// perfect squares.
template <Field T>
T field_sqrt(const T& value) {
  auto root = FieldTraits<T>::sqrt(value);
  if (!root) {
    throw ContractViolation("square root of " + FieldTraits<T>::format(value) +
                            " is not representable in this field");
  }
  return *root;
}

}  // namespace kappa
