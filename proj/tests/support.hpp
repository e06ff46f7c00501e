#pragma once

// Shared generators and independent oracles for the test binaries.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lrs/fields.hpp"
#include "lrs/poly.hpp"
#include "lrs/spectrum.hpp"
#include "lrs/tower.hpp"

namespace lrs::testing {

using Rng = std::mt19937_64;

inline FieldElement random_element(const FieldDescriptor& f, Rng& rng) {
  if (f.is_rationals()) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return FieldElement::from_rational(f, mpq_class(num(rng), den(rng)));
  }
  std::uniform_int_distribution<std::uint64_t> digit(0, f.characteristic() - 1);
  std::vector<std::uint64_t> c(f.degree());
  for (auto& v : c) v = digit(rng);
  return FieldElement::from_coefficients(f, c);
}

inline FieldElement random_nonzero(const FieldDescriptor& f, Rng& rng) {
  for (;;) {
    auto e = random_element(f, rng);
    if (!e.is_zero()) return e;
  }
}

inline Polynomial random_monic(const FieldDescriptor& f, std::size_t degree, Rng& rng) {
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < degree; ++i) c.push_back(random_element(f, rng));
  c.push_back(FieldElement::one(f));
  return Polynomial(f, std::move(c));
}

// Small rationals keep the Q oracle's numbers manageable.
inline const std::vector<mpq_class>& rational_root_pool() {
  static const std::vector<mpq_class> pool{mpq_class(1),  mpq_class(-1), mpq_class(2),    mpq_class(-2),
                                           mpq_class(3),  mpq_class(1, 2), mpq_class(-1, 3)};
  return pool;
}

/// Monic polynomial of the given degree; over Q a product of linear factors
/// with roots from a small pool.
inline Polynomial random_input(const FieldDescriptor& f, std::size_t degree, Rng& rng) {
  if (!f.is_rationals()) return random_monic(f, degree, rng);
  const auto& pool = rational_root_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Polynomial out = Polynomial::constant(FieldElement::one(f));
  for (std::size_t i = 0; i < degree; ++i) {
    out = out * Polynomial::linear(FieldElement::from_rational(f, pool[pick(rng)]));
  }
  return out;
}

/// Goettfert-Niederreiter: the largest e+t+1 with e < i, t < j and
/// C(e+t, e) nonzero in characteristic p, with plain big-integer binomials.
inline std::uint64_t gn_wedge(std::uint64_t i, std::uint64_t j, std::uint64_t p) {
  std::uint64_t best = 0;
  for (std::uint64_t e = 0; e < i; ++e) {
    for (std::uint64_t t = 0; t < j; ++t) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), e + t, e);
      const bool nonzero = p == 0 ? b != 0 : mpz_divisible_ui_p(b.get_mpz_t(), p) == 0;
      if (nonzero) best = std::max(best, e + t + 1);
    }
  }
  return best;
}

/// Compare two spectra after moving both into a common splitting field.
inline bool same_spectrum(const RootSpectrum& a, const RootSpectrum& b) {
  const unsigned d = std::lcm(a.splitting_degree(), b.splitting_degree());
  return reembed(a, d) == reembed(b, d);
}

}  // namespace lrs::testing
