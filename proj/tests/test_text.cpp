#include "doctest.h"

#include "lrs/error.hpp"
#include "lrs/text.hpp"
#include "support.hpp"

using namespace lrs;
using lrs::testing::Rng;

TEST_CASE("text: field specs") {
  CHECK(parse_field("Q").is_rationals());
  CHECK(parse_field(" GF(5) ") == make_field(5));
  CHECK(parse_field("GF(4)") == make_field(2, 2));
  CHECK(parse_field("GF(2^2)") == make_field(2, 2));
  CHECK(parse_field("GF(9)") == make_field(3, 2));
  CHECK(parse_field("GF(2^3)/x^3+x^2+1").name() == "GF(2^3)/x^3+x^2+1");
  CHECK(parse_field("GF(8)/x^3+x+1") == make_field(2, 3));
}

TEST_CASE("text: malformed field specs point at the problem") {
  const auto position = [](const char* text) -> std::size_t {
    try {
      parse_field(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("GF(6)") == 3);
  CHECK(position("GF(2^3") == 6);
  CHECK(position("F(2)") == 0);
  CHECK(position("GF(4^2)") == 3);
  CHECK(position("GF(2^2)/x^2+1") == 8);          // reducible
  CHECK(position("GF(2^2)/x^3+x+1") == 8);        // wrong degree
  CHECK(position("GF(2^2)/x^2+*1") == 12);        // inner syntax error, offset into the whole spec
  CHECK(position("GF(2)x") == 5);
}

TEST_CASE("text: polynomial syntax") {
  const auto g5 = make_field(5);
  const auto q = FieldDescriptor::rationals();
  CHECK(parse_polynomial("x^2*(x+1)", g5).to_string() == "x^3+x^2");
  CHECK(parse_polynomial(" 3 x ^ 2 - x + 7 ", g5).to_string() == "3*x^2+4*x+2");
  CHECK(parse_polynomial("(x-1)^3", make_field(3)).to_string() == "x^3+2");
  CHECK(parse_polynomial("x/2+1/3", q).to_string() == "1/2*x+1/3");
  CHECK(parse_polynomial("-x^2", q).to_string() == "-x^2");
  CHECK(parse_polynomial("(x^2-1)/(x-1)", q).to_string() == "x+1");
  CHECK(parse_polynomial("x(x+1)", q).to_string() == "x^2+x");
  CHECK(parse_polynomial("X^0", q).is_one());
  CHECK(parse_polynomial("0", q).is_zero());
  const auto g4 = make_field(2, 2);
  CHECK(parse_polynomial("[0,1]*x^2+[1]", g4).to_string() == "[0,1]*x^2+1");
  CHECK(parse_polynomial("[1,-1]", make_field(3, 2)).to_string() == "[1,2]");
  CHECK(parse_element("-1/2", q).to_string() == "-1/2");
  CHECK(parse_element("1/2", g5).to_string() == "3");
}

TEST_CASE("text: malformed polynomials carry a caret position") {
  const auto q = FieldDescriptor::rationals();
  const auto position = [&](const char* text, const FieldDescriptor& f) -> std::size_t {
    try {
      parse_polynomial(text, f);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position("x^2+*x", q) == 4);
  CHECK(position("(x+1", q) == 4);
  CHECK(position("x^", q) == 2);
  CHECK(position("x^-1", q) == 2);
  CHECK(position("y", q) == 0);
  CHECK(position("x/0", q) == 2);
  CHECK(position("x/(x+1)", q) == 2);
  CHECK(position("[1,2]", q) == 0);
  CHECK(position("[1,1,1]", make_field(2, 2)) == 0);
  CHECK(position("x^9999999", q) == 2);
  CHECK(position("", q) == 0);
  CHECK(position("x)", q) == 1);
  try {
    parse_polynomial("x+$", q);
  } catch (const ParseError& e) {
    CHECK(e.caret() == "x+$\n  ^");
  }
  CHECK_THROWS_AS(parse_element("x", q), ParseError);
}

TEST_CASE("text: printed polynomials re-parse to equal polynomials") {
  Rng rng(61);
  for (const auto& f : {make_field(2), make_field(7), make_field(2, 2), make_field(3, 3), make_field(5, 2),
                        parse_field("GF(2^3)/x^3+x^2+1"), FieldDescriptor::rationals()}) {
    for (int it = 0; it < 100; ++it) {
      const auto p = lrs::testing::random_monic(f, rng() % 7, rng).scaled(lrs::testing::random_element(f, rng));
      REQUIRE(parse_polynomial(p.to_string(), f) == p);
    }
  }
}
