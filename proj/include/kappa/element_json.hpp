#pragma once

// KElement wire form: {"lambda": 1 | -1, "coeffs": ["c0", ..., "c7"]}.
// Coefficients are decimal strings; rationals also accept "p/q". JSON numbers
// are read through their decimal spelling.

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "kappa/kelement.hpp"

namespace kappa {

/// Well-formed JSON that does not describe an element.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <Field T>
nlohmann::ordered_json element_to_json(const KElement<T>& x);

template <Field T>
KElement<T> element_from_json(const nlohmann::json& j);

/// Parses text; malformed JSON raises ParseError carrying the byte offset.
template <Field T>
KElement<T> parse_element(std::string_view text);

template <Field T>
std::string dump_element(const KElement<T>& x) {
  return element_to_json(x).dump();
}

}  // namespace kappa
