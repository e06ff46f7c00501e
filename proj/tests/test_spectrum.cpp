#include "doctest.h"

#include <array>

#include "lrs/error.hpp"
#include "lrs/spectrum.hpp"
#include "lrs/wedge.hpp"
#include "lrs/text.hpp"
#include "support.hpp"

using namespace lrs;
using lrs::testing::Rng;
using lrs::testing::same_spectrum;

namespace {

Polynomial P(const char* text, const FieldDescriptor& f) { return parse_polynomial(text, f); }

RootSpectrum S(const char* text, const FieldDescriptor& f) { return from_poly(P(text, f)); }

// x^s times a random monic with nonzero constant term, or 1.
Polynomial random_char_poly(const FieldDescriptor& f, Rng& rng, std::size_t max_deg) {
  const std::size_t s = rng() % 3;
  const std::size_t d = rng() % (max_deg + 1);
  Polynomial q = lrs::testing::random_input(f, d, rng);
  while (d > 0 && q.coeff(0).is_zero()) q = lrs::testing::random_input(f, d, rng);
  return Polynomial::monomial(f, s) * q;
}

}  // namespace

TEST_CASE("spectrum: from_poly examples") {
  const auto g2 = make_field(2);
  const auto a = S("x^2*(x+1)", g2);
  CHECK(a.zero_mult() == 2);
  CHECK(a.entries().size() == 1);
  CHECK(a.multiplicity(FieldElement::one(g2)) == 1);

  const auto b = S("x^2+x+1", g2);
  CHECK(b.zero_mult() == 0);
  CHECK(b.splitting_degree() == 2);
  const auto alpha = FieldElement::generator(make_field(2, 2));
  CHECK(b.multiplicity(alpha) == 1);
  CHECK(b.multiplicity(alpha + FieldElement::one(alpha.field())) == 1);

  const auto one = S("1", g2);
  CHECK(one.is_zero_space());
  CHECK_THROWS_AS(from_poly(P("2*x+1", make_field(3))), DomainError);
  CHECK_THROWS_AS(from_poly(P("x^2-2", FieldDescriptor::rationals())), IrrationalRoots);
}

TEST_CASE("spectrum: to_poly examples") {
  const auto g2 = make_field(2), g3 = make_field(3);
  CHECK(to_poly(S("x^2+x+1", g2)) == P("x^2+x+1", g2));
  RootSpectrum z(g2);
  z.set_zero_mult(3);
  CHECK(to_poly(z) == P("x^3", g2));
  RootSpectrum r(g3);
  r.raise(FieldElement::one(g3), 2);
  CHECK(to_poly(r).to_string() == "x^2+x+1");
}

TEST_CASE("spectrum: to_poly refuses spectra that are not orbit-closed") {
  const auto g2 = make_field(2);
  RootSpectrum s(g2, 2);
  s.raise(FieldElement::generator(make_field(2, 2)), 1);
  CHECK(!s.is_orbit_closed());
  CHECK_THROWS_AS(to_poly(s), DescentError);
  CHECK_THROWS_AS(s.raise(FieldElement::zero(make_field(2, 2)), 1), DomainError);
}

TEST_CASE("spectrum: round trip on random polynomials") {
  Rng rng(41);
  for (const auto& f : {make_field(2), make_field(3), make_field(2, 2), make_field(5), make_field(3, 2),
                        FieldDescriptor::rationals()}) {
    for (int it = 0; it < 60; ++it) {
      const auto p = random_char_poly(f, rng, 6);
      const auto s = from_poly(p, rng());
      REQUIRE(s.is_orbit_closed());
      REQUIRE(s.dimension() == static_cast<std::uint64_t>(p.degree()));
      REQUIRE(to_poly(s) == p);
    }
  }
}

TEST_CASE("spectrum: addition") {
  const auto g3 = make_field(3);
  CHECK(to_poly(spec_add(S("(x-1)^2", g3), S("(x-1)^3", g3))) == P("(x-1)^3", g3));
  const auto a = S("x*(x^2+1)", g3);
  CHECK(spec_add(a, S("1", g3)) == a);
  const auto g2 = make_field(2);
  CHECK(to_poly(spec_add(S("x^2+x+1", g2), S("x^3+x+1", g2))) == P("(x^2+x+1)*(x^3+x+1)", g2));
}

TEST_CASE("spectrum: named products") {
  const auto g2 = make_field(2), g3 = make_field(3);
  CHECK(to_poly(spec_mul(S("x^2+x+1", g2), S("x^2+x+1", g2))) == P("x^3+1", g2));
  CHECK(to_poly(spec_mul(S("x^2*(x+1)", g2), S("x^3", g2))) == P("x^3", g2));
  CHECK(to_poly(spec_mul(S("x^2*(x+1)", g2), S("x*(x+1)", g2))) == P("x^2*(x+1)", g2));
  CHECK(to_poly(spec_mul(S("(x-1)^2", g3), S("(x-1)^2", g3))) == P("(x-1)^3", g3));
  const auto a = S("x^2*(x^2+x+1)", g2);
  CHECK(same_spectrum(spec_mul(a, S("x+1", g2)), a));
}

TEST_CASE("spectrum: semiring laws on random triples") {
  Rng rng(42);
  for (const auto& f : {make_field(2), make_field(3), make_field(2, 2)}) {
    CAPTURE(f.name());
    const auto identity = from_poly(Polynomial::linear(FieldElement::one(f)));
    const auto zero = RootSpectrum(f);
    for (int it = 0; it < 120; ++it) {
      const auto a = from_poly(random_char_poly(f, rng, 4));
      const auto b = from_poly(random_char_poly(f, rng, 4));
      const auto c = from_poly(random_char_poly(f, rng, 4));
      REQUIRE(same_spectrum(spec_add(a, b), spec_add(b, a)));
      REQUIRE(same_spectrum(spec_mul(a, b), spec_mul(b, a)));
      REQUIRE(same_spectrum(spec_add(spec_add(a, b), c), spec_add(a, spec_add(b, c))));
      REQUIRE(same_spectrum(spec_mul(spec_mul(a, b), c), spec_mul(a, spec_mul(b, c))));
      REQUIRE(same_spectrum(spec_mul(a, spec_add(b, c)), spec_add(spec_mul(a, b), spec_mul(a, c))));
      REQUIRE(same_spectrum(spec_mul(a, identity), a));
      REQUIRE(same_spectrum(spec_add(a, zero), a));
      REQUIRE(spec_mul(a, zero).is_zero_space());
      REQUIRE(spec_mul(a, b).is_orbit_closed());
    }
  }
}

TEST_CASE("spectrum: products are graded by root values") {
  const auto g4 = make_field(2, 2);
  const auto alpha = FieldElement::generator(g4);
  RootSpectrum a(g4), b(g4);
  a.raise(alpha, 2);
  b.raise(alpha, 3);
  const auto ab = spec_mul(a, b);
  REQUIRE(ab.entries().size() == 1);
  CHECK(ab.multiplicity(alpha * alpha) == wedge(2, 3, WedgeContext(2)));
  CHECK(ab.zero_mult() == 0);
}

TEST_CASE("spectrum: upsilon classes") {
  const auto g2 = make_field(2);
  const auto s = S("x^2+x+1", g2);
  const auto u = upsilon_mary({s, s});
  CHECK(u.tuple_count == 4);
  REQUIRE(u.classes.size() == 3);
  for (const auto& c : u.classes) CHECK(c.best == 1);
  CHECK(to_poly(u.spectrum) == P("x^3+1", g2));

  CHECK(upsilon_mary({s}).spectrum == s);
  CHECK(upsilon_mary({s, RootSpectrum(g2, 2)}).spectrum.is_zero_space());
  CHECK_THROWS_AS(upsilon_mary({S("x", g2)}), DomainError);
  CHECK_THROWS_AS(upsilon_mary({s, s, s}, 7), BudgetExceeded);
}

TEST_CASE("spectrum: rho and theta") {
  const auto g2 = make_field(2);
  const auto r = product_char_poly({P("x^2*(x+1)", g2), P("x^3", g2)});
  CHECK(r.result == P("x^3", g2));
  CHECK(r.rho == 3);
  CHECK(r.theta == std::vector<std::size_t>{2});

  const auto r2 = product_char_poly({P("x^2*(x+1)", g2), P("x*(x+1)", g2)});
  CHECK(r2.result == P("x^2*(x+1)", g2));
  CHECK(r2.rho == 2);
  CHECK(r2.theta.empty());

  const auto q = FieldDescriptor::rationals();
  CHECK(product_char_poly({P("x-2", q), P("x-3", q)}).result == P("x-6", q));
  CHECK(product_char_poly({P("x^2+x+1", g2), P("x+1", g2)}).result == P("x^2+x+1", g2));
  CHECK_THROWS_AS(product_char_poly({P("1", g2), P("x", g2)}), DomainError);
  CHECK_THROWS_AS(product_char_poly({P("x^2-2", q), P("x-1", q)}), IrrationalRoots);
}

TEST_CASE("spectrum: fold agrees with the m-ary rule") {
  Rng rng(43);
  for (const auto& f : {make_field(2), make_field(3), make_field(2, 2), make_field(5), FieldDescriptor::rationals()}) {
    for (int it = 0; it < 40; ++it) {
      std::vector<Polynomial> polys;
      const std::size_t m = 2 + rng() % 3;
      for (std::size_t k = 0; k < m; ++k) {
        Polynomial p(f);
        do p = random_char_poly(f, rng, 3);
        while (p.degree() < 1);
        polys.push_back(p);
      }
      const auto r = product_char_poly(polys, {rng(), kDefaultTupleCap});
      REQUIRE(r.result == r.fold_result);
      REQUIRE(product_char_poly_fold(polys) == r.result);
    }
  }
}

TEST_CASE("spectrum: JSON debug form") {
  const auto j = S("x*(x^2+x+1)", make_field(2)).to_json();
  CHECK(j["base"] == "GF(2)");
  CHECK(j["splitting_degree"] == 2);
  CHECK(j["zero_mult"] == 1);
  CHECK(j["entries"].dump() == R"([["[0,1]",1],["[1,1]",1]])");
}
