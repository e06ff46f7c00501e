#include "doctest.h"

#include <array>

#include "lrs/error.hpp"
#include "lrs/wedge.hpp"
#include "support.hpp"

using namespace lrs;

TEST_CASE("wedge: characteristic 0 is i+j-1") {
  const WedgeContext q(0);
  CHECK(wedge(5, 7, q) == 11);
  CHECK(wedge(1, 1, q) == 1);
  CHECK(wedge(1, 9, q) == 9);
}

TEST_CASE("wedge: small values in characteristic p") {
  CHECK(wedge(2, 2, WedgeContext(2)) == 2);
  CHECK(wedge(2, 2, WedgeContext(3)) == 3);
  CHECK(wedge(3, 3, WedgeContext(2)) == 4);
  CHECK(wedge(5, 7, WedgeContext(3)) == 9);
  // p^a ^ p^b = p^max(a,b): the Frobenius-closed subspaces.
  CHECK(wedge(4, 8, WedgeContext(2)) == 8);
  CHECK(wedge(9, 3, WedgeContext(3)) == 9);
}

TEST_CASE("wedge: zero absorbs") {
  for (std::uint64_t p : {0, 2, 5}) {
    CHECK(wedge(0, 4, WedgeContext(p)) == 0);
    CHECK(wedge(4, 0, WedgeContext(p)) == 0);
  }
}

TEST_CASE("wedge: closed form matches the binomial oracle") {
  for (std::uint64_t p : {0, 2, 3, 5, 7, 11}) {
    const WedgeContext ctx(p);
    for (std::uint64_t i = 1; i <= 24; ++i) {
      for (std::uint64_t j = 1; j <= 24; ++j) {
        const auto expected = lrs::testing::gn_wedge(i, j, p);
        REQUIRE_MESSAGE(wedge(i, j, ctx) == expected, "p=" << p << " i=" << i << " j=" << j);
        REQUIRE(wedge_oracle(i, j, ctx) == expected);
      }
    }
  }
}

TEST_CASE("wedge: explanation exposes digits and q") {
  const auto ex = explain_wedge(5, 7, WedgeContext(3));
  CHECK(ex.i_minus_one.digits == std::vector<std::uint64_t>{1, 1});
  CHECK(ex.j_minus_one.digits == std::vector<std::uint64_t>{0, 2});
  CHECK(ex.q == 2);
  CHECK(ex.value == 9);
}

TEST_CASE("wedge: lambda rule") {
  CHECK(wedge_lambda(3, 5, true) == 3);
  CHECK(wedge_lambda(4, 2, true) == 2);
  CHECK(wedge_lambda(3, 5, false) == 3);
  CHECK(wedge_lambda(3, 0, false) == 0);
  CHECK(wedge_lambda(0, 2, false) == 0);
}

TEST_CASE("wedge: fold") {
  const WedgeContext ctx(2);
  const std::array<std::uint64_t, 3> v{2, 2, 2};
  CHECK(wedge_fold(v, ctx) == wedge(wedge(2, 2, ctx), 2, ctx));
  const std::array<std::uint64_t, 1> one{7};
  CHECK(wedge_fold(one, ctx) == 7);
  CHECK_THROWS_AS(wedge_fold(std::span<const std::uint64_t>{}, ctx), DomainError);
}

TEST_CASE("wedge: Lucas binomials agree with exact ones") {
  for (std::uint64_t p : {2, 3, 7}) {
    const WedgeContext ctx(p);
    for (std::uint64_t n = 0; n <= 60; ++n) {
      for (std::uint64_t k = 0; k <= n + 1; ++k) {
        mpz_class exact;
        mpz_bin_uiui(exact.get_mpz_t(), n, k);
        mpz_class r = exact % static_cast<unsigned long>(p);
        REQUIRE(binom_mod(n, k, ctx) == r);
      }
    }
  }
  mpz_class big;
  mpz_bin_uiui(big.get_mpz_t(), 100, 50);
  CHECK(binom_mod(100, 50, WedgeContext(0)) == big);
}

TEST_CASE("wedge: structure constants expand products of binomials") {
  const WedgeContext zero(0);
  for (std::uint64_t e = 0; e <= 6; ++e) {
    for (std::uint64_t t = 0; t <= 6; ++t) {
      for (std::uint64_t n = 0; n <= 14; ++n) {
        mpz_class lhs = binom_mod(n, e, zero) * binom_mod(n, t, zero);
        mpz_class rhs = 0;
        for (std::uint64_t m = std::max(e, t); m <= e + t; ++m) rhs += struct_const(e, t, m, zero) * binom_mod(n, m, zero);
        REQUIRE(lhs == rhs);
      }
    }
  }
  CHECK_THROWS_AS(struct_const(2, 3, 6, zero), DomainError);
  CHECK_THROWS_AS(struct_const(2, 3, 2, zero), DomainError);
}

TEST_CASE("wedge: invalid characteristic") {
  CHECK_THROWS_AS(WedgeContext(4), DomainError);
  CHECK_THROWS_AS(WedgeContext(1), DomainError);
  CHECK_THROWS_AS(wedge_oracle(0, 3, WedgeContext(2)), DomainError);
}

TEST_CASE("wedge: p-adic expansion") {
  const auto e = PExpansion::of(100, 3);
  CHECK(e.digits == std::vector<std::uint64_t>{1, 0, 2, 0, 1});
  CHECK(e.value() == 100);
  CHECK(e.digit(10) == 0);
  CHECK(PExpansion::of(0, 5).digits.empty());
}
