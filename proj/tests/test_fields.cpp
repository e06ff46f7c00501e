#include "doctest.h"

#include "lrs/error.hpp"
#include "lrs/fields.hpp"
#include "support.hpp"

using namespace lrs;
using lrs::testing::Rng;
using lrs::testing::random_element;
using lrs::testing::random_nonzero;

namespace {

std::vector<std::uint64_t> modulus_of(const FieldDescriptor& f) { return {f.modulus().begin(), f.modulus().end()}; }

}  // namespace

TEST_CASE("fields: canonical moduli") {
  CHECK(modulus_of(make_field(2, 2)) == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(modulus_of(make_field(2, 3)) == std::vector<std::uint64_t>{1, 1, 0, 1});
  CHECK(modulus_of(make_field(2, 4)) == std::vector<std::uint64_t>{1, 1, 0, 0, 1});
  CHECK(modulus_of(make_field(3, 2)) == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(modulus_of(make_field(5, 2)) == std::vector<std::uint64_t>{2, 0, 1});
  CHECK(make_field(7).modulus().empty());
}

TEST_CASE("fields: names") {
  CHECK(FieldDescriptor::rationals().name() == "Q");
  CHECK(make_field(5).name() == "GF(5)");
  CHECK(make_field(2, 3).name() == "GF(2^3)");
  CHECK(FieldDescriptor::finite(2, {1, 0, 1, 1}).name() == "GF(2^3)/x^3+x^2+1");
  CHECK(FieldDescriptor::finite(2, {1, 1, 0, 1}) == make_field(2, 3));
  CHECK(FieldDescriptor::finite(2, {1, 1, 0, 1}).is_canonical());
  CHECK(FieldDescriptor::finite(7, {3, 1}) == make_field(7));
}

TEST_CASE("fields: invalid descriptors") {
  CHECK_THROWS_AS(make_field(6), DomainError);
  CHECK_THROWS_AS(make_field(0, 2), DomainError);
  CHECK_THROWS_AS(FieldDescriptor::finite(2, {1, 0, 1}), DomainError);  // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(FieldDescriptor::finite(3, {1, 2}), DomainError);     // not monic
  CHECK_THROWS_AS(FieldDescriptor::finite(2, {1}), DomainError);
}

TEST_CASE("fields: field axioms on random elements") {
  Rng rng(11);
  for (const auto& f : {make_field(2), make_field(5), make_field(2, 2), make_field(3, 2), make_field(2, 5),
                        make_field(7, 3), FieldDescriptor::finite(2, {1, 0, 1, 1}), FieldDescriptor::rationals()}) {
    CAPTURE(f.name());
    const auto zero = FieldElement::zero(f), one = FieldElement::one(f);
    for (int it = 0; it < 200; ++it) {
      const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + zero == a);
      REQUIRE(a * one == a);
      REQUIRE(a + (-a) == zero);
      REQUIRE(a - b == a + (-b));
      if (!a.is_zero()) {
        REQUIRE(a * a.inverse() == one);
        REQUIRE(b / a * a == b);
      }
    }
  }
}

TEST_CASE("fields: Frobenius and the multiplicative group") {
  Rng rng(12);
  for (const auto& f : {make_field(2, 3), make_field(3, 2), make_field(5, 2), make_field(2, 6), make_field(3, 4)}) {
    CAPTURE(f.name());
    const mpz_class q = f.order();
    for (int it = 0; it < 50; ++it) {
      const auto a = random_element(f, rng);
      REQUIRE(a.pow(q) == a);
      REQUIRE(a.frobenius() == a.pow(f.characteristic()));
      if (!a.is_zero()) REQUIRE(a.pow(mpz_class(q - 1)).is_one());
    }
  }
}

TEST_CASE("fields: generator generates GF(4)*") {
  const auto f = make_field(2, 2);
  const auto a = FieldElement::generator(f);
  CHECK(a.to_string() == "[0,1]");
  CHECK(a * a == a + FieldElement::one(f));
  CHECK(a.pow(std::uint64_t{3}).is_one());
}

TEST_CASE("fields: Frobenius orbits") {
  const auto f = make_field(2, 4);
  const auto a = FieldElement::generator(f);
  CHECK(frobenius_orbit(a).size() == 4);
  CHECK(frobenius_orbit(FieldElement::one(f)).size() == 1);
  // a^5 lies in GF(4) inside GF(16).
  CHECK(frobenius_orbit(a.pow(std::uint64_t{5})).size() == 2);
  CHECK_THROWS_AS(frobenius_orbit(FieldElement::one(FieldDescriptor::rationals())), DomainError);
}

TEST_CASE("fields: integers reduce into the field") {
  const auto f = make_field(7);
  CHECK(FieldElement::from_integer(f, 15) == FieldElement::from_integer(f, 1));
  CHECK(FieldElement::from_integer(f, -1).to_string() == "6");
  CHECK(FieldElement::from_rational(f, mpq_class(1, 2)) == FieldElement::from_integer(f, 4));
  CHECK_THROWS_AS(FieldElement::from_rational(f, mpq_class(1, 7)), DomainError);
  const auto q = FieldDescriptor::rationals();
  CHECK(FieldElement::from_rational(q, mpq_class(-3, 6)).to_string() == "-1/2");
}

TEST_CASE("fields: canonical order") {
  const auto f = make_field(3, 2);
  const std::uint64_t c10[] = {1, 0}, c01[] = {0, 1}, c20[] = {2, 0};
  const auto a = FieldElement::from_coefficients(f, c10), b = FieldElement::from_coefficients(f, c01),
             c = FieldElement::from_coefficients(f, c20);
  CHECK(CanonicalLess{}(a, c));
  CHECK(CanonicalLess{}(c, b));
  CHECK(!CanonicalLess{}(b, b));
}

TEST_CASE("fields: mixing fields is an error") {
  CHECK_THROWS_AS(FieldElement::one(make_field(2)) + FieldElement::one(make_field(3)), FieldMismatch);
  CHECK_THROWS_AS(FieldElement::zero(make_field(5)).inverse(), DomainError);
}

TEST_CASE("fields: primality and inverses mod p") {
  CHECK(is_prime(2));
  CHECK(is_prime(4294967291ULL));
  CHECK(!is_prime(1));
  CHECK(!is_prime(561));
  CHECK(inverse_mod(3, 7) == 5);
}
