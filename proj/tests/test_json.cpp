#include "doctest.h"
#include "kappa/element_json.hpp"

using namespace kappa;

TEST_CASE("element JSON round trip") {
  auto x = KElement<Rational>::zero(Orientation::Negative);
  for (int k = 0; k < 8; ++k) x[k] = FieldTraits<Rational>::from_ratio(k - 3, 7);
  const std::string text = dump_element(x);
  CHECK(text.rfind("{\"lambda\":-1,\"coeffs\":[\"-3/7\"", 0) == 0);
  CHECK(parse_element<Rational>(text) == x);

  auto y = KElement<double>::identity(Orientation::Positive);
  y[kI3Einf] = 0.1;
  CHECK(parse_element<double>(dump_element(y)) == y);
}

TEST_CASE("numbers and decimal strings are accepted") {
  const auto x = parse_element<Rational>(R"({"lambda":1,"coeffs":[1,"0.5","-2/4",0,0,0,0,"1e-1"]})");
  CHECK(x[0] == 1);
  CHECK(x[1] == Rational(1, 2));
  CHECK(x[2] == Rational(-1, 2));
  CHECK(x[7] == Rational(1, 10));
}

TEST_CASE("malformed JSON reports a byte position") {
  try {
    parse_element<Rational>(R"({"lambda": 1,)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 14);
  }
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_element<Rational>(R"([1,2])"), SchemaError);
  CHECK_THROWS_AS(parse_element<Rational>(R"({"lambda":1,"coeffs":[1,2,3]})"), SchemaError);
  CHECK_THROWS_AS(parse_element<Rational>(R"({"lambda":2,"coeffs":[0,0,0,0,0,0,0,0]})"), SchemaError);
  CHECK_THROWS_AS(parse_element<Rational>(R"({"coeffs":[0,0,0,0,0,0,0,0]})"), SchemaError);
  CHECK_THROWS_AS(parse_element<Rational>(R"({"lambda":1,"coeffs":[0,0,0,0,0,0,0,0],"x":1})"), SchemaError);
  CHECK_THROWS_AS(parse_element<Rational>(R"({"lambda":1,"coeffs":[0,0,0,0,0,0,0,"a"]})"), SchemaError);
  CHECK_THROWS_AS(parse_element<Rational>(R"({"lambda":1,"coeffs":[0,0,0,0,0,0,0,null]})"), SchemaError);
}
