#include "kappa/field.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <system_error>

namespace kappa {

std::string_view to_string(FieldMode mode) {
  return mode == FieldMode::Rational ? "rational" : "float";
}

double FieldTraits<double>::parse(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("not a number: '" + std::string(text) + "'",
                     static_cast<std::size_t>(ptr - text.data()));
  }
  if (!std::isfinite(value)) {
    throw ParseError("non-finite coefficient: '" + std::string(text) + "'", 0);
  }
  return value;
}

std::string FieldTraits<double>::format(double value) {
  if (value == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t first_non_digit(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

}  // namespace

Rational FieldTraits<Rational>::parse(std::string_view text) {
  std::string_view s = text;
  std::size_t offset = 0;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
    offset = 1;
  }

  const auto fail = [&](std::size_t pos) -> Rational {
    throw ParseError("not a rational: '" + std::string(text) + "'", offset + pos);
  };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num)) return fail(first_non_digit(num));
    if (!all_digits(den)) return fail(slash + 1 + first_non_digit(den));
    mpz_class d(std::string(den), 10);
    if (d == 0) return fail(slash + 1);
    Rational r(mpz_class(std::string(num), 10), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  // Decimal: digits[.digits][(e|E)[+-]digits]
  std::size_t exp_pos = s.find_first_of("eE");
  std::string_view mantissa = s.substr(0, exp_pos);
  long exponent = 0;
  if (exp_pos != std::string_view::npos) {
    std::string_view e = s.substr(exp_pos + 1);
    auto [ptr, ec] = std::from_chars(e.data() + (e.starts_with('+') ? 1 : 0),
                                     e.data() + e.size(), exponent);
    if (ec != std::errc{} || ptr != e.data() + e.size() || e.empty()) {
      return fail(exp_pos + 1);
    }
    if (exponent > 4096 || exponent < -4096) return fail(exp_pos + 1);
  }
  std::string digits;
  std::size_t dot = mantissa.find('.');
  std::string_view int_part = mantissa.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : mantissa.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) return fail(0);
  if (!int_part.empty() && !all_digits(int_part)) return fail(first_non_digit(int_part));
  if (!frac_part.empty() && !all_digits(frac_part)) return fail(dot + 1 + first_non_digit(frac_part));
  digits.append(int_part);
  digits.append(frac_part);
  exponent -= static_cast<long>(frac_part.size());

  mpz_class numerator(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(numerator, scale) : Rational(numerator * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string FieldTraits<Rational>::format(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

std::optional<Rational> FieldTraits<Rational>::sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn = ::sqrt(num);
  mpz_class rd = ::sqrt(den);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace kappa
