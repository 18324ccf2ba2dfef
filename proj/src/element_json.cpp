#include "kappa/element_json.hpp"

namespace kappa {

template <Field T>
nlohmann::ordered_json element_to_json(const KElement<T>& x) {
  nlohmann::ordered_json j;
  j["lambda"] = lambda_value(x.lambda);
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const T& c : x.coeffs) coeffs.push_back(FieldTraits<T>::format(c));
  j["coeffs"] = std::move(coeffs);
  return j;
}

template <Field T>
KElement<T> element_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("element must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "lambda" && key != "coeffs") throw SchemaError("unknown element field '" + key + "'");
  }
  if (!j.contains("lambda") || !j["lambda"].is_number_integer()) {
    throw SchemaError("element needs an integer \"lambda\" of 1 or -1");
  }
  const long l = j["lambda"].get<long>();
  if (l != 1 && l != -1) throw SchemaError("\"lambda\" must be 1 or -1, got " + std::to_string(l));

  if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw SchemaError("element needs a \"coeffs\" array");
  }
  const auto& coeffs = j["coeffs"];
  if (coeffs.size() != kBasisSize) {
    throw SchemaError("\"coeffs\" must have 8 entries, got " + std::to_string(coeffs.size()));
  }
  KElement<T> x = KElement<T>::zero(orientation_from_int(l));
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    const auto& c = coeffs[i];
    std::string text;
    if (c.is_string()) {
      text = c.get<std::string>();
    } else if (c.is_number()) {
      text = c.dump();
    } else {
      throw SchemaError("coefficient " + std::to_string(i) + " must be a string or number");
    }
    try {
      x.coeffs[i] = FieldTraits<T>::parse(text);
    } catch (const ParseError& e) {
      throw SchemaError("coefficient " + std::to_string(i) + ": " + e.what());
    }
  }
  return x;
}

template <Field T>
KElement<T> parse_element(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed element JSON at byte ") + std::to_string(e.byte) +
                         ": " + e.what(),
                     e.byte);
  }
  return element_from_json<T>(j);
}

template nlohmann::ordered_json element_to_json(const KElement<double>&);
template nlohmann::ordered_json element_to_json(const KElement<Rational>&);
template KElement<double> element_from_json<double>(const nlohmann::json&);
template KElement<Rational> element_from_json<Rational>(const nlohmann::json&);
template KElement<double> parse_element<double>(std::string_view);
template KElement<Rational> parse_element<Rational>(std::string_view);

}  // namespace kappa
