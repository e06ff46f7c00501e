#pragma once

// Characteristic-dependent operations on the naturals that govern root
// multiplicities of products of linear recurrence sequences:
//
//   i ^ j   (wedge)        multiplicity of lambda*mu when lambda has
//                          multiplicity i and mu has multiplicity j
//   t ^_l s (wedge_lambda) multiplicity of the zero root against root l
//   i v j                  plain maximum
//
// In characteristic 0, i ^ j = i + j - 1. In characteristic p the value is
// read off the base-p digits of i-1 and j-1.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace lrs {

/// The characteristic (0 or a prime) that parameterizes the wedge operations.
class WedgeContext {
 public:
  /// Throws DomainError unless `characteristic` is 0 or prime.
  explicit WedgeContext(std::uint64_t characteristic);

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_zero_characteristic() const { return characteristic_ == 0; }

  friend bool operator==(const WedgeContext&, const WedgeContext&) = default;

 private:
  std::uint64_t characteristic_;
};

/// Base-p digits of a non-negative integer, least significant first, with
/// no trailing zero digits (zero has an empty digit list).
struct PExpansion {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;

  static PExpansion of(std::uint64_t value, std::uint64_t base);

  /// Digit m, or 0 past the end.
  std::uint64_t digit(std::size_t m) const { return m < digits.size() ? digits[m] : 0; }
  std::uint64_t value() const;
};

/// C(n, k) reduced in the characteristic of `ctx` (Lucas's theorem for
/// p > 0, exact big-integer arithmetic for characteristic 0). k > n gives 0.
mpz_class binom_mod(std::uint64_t n, std::uint64_t k, const WedgeContext& ctx);

/// Closed-form i ^ j. Zero if either argument is zero.
std::uint64_t wedge(std::uint64_t i, std::uint64_t j, const WedgeContext& ctx);

/// The digit expansion behind a closed-form wedge evaluation.
struct WedgeExplanation {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  std::uint64_t value = 0;
  PExpansion i_minus_one;
  PExpansion j_minus_one;
  /// Smallest q with i_m + j_m < p for every m >= q (characteristic p only).
  std::uint64_t q = 0;
};

WedgeExplanation explain_wedge(std::uint64_t i, std::uint64_t j, const WedgeContext& ctx);

/// Brute-force i ^ j: the maximum of e + t + 1 over 0 <= e < i, 0 <= t < j
/// with C(e + t, e) nonzero. O(i*j) binomials; meant as a test oracle.
/// Throws DomainError if i or j is zero.
std::uint64_t wedge_oracle(std::uint64_t i, std::uint64_t j, const WedgeContext& ctx);

/// t ^_lambda s: min(t, s) against the zero root, t against a nonzero root
/// of a nonzero space, 0 against the zero space.
std::uint64_t wedge_lambda(std::uint64_t t, std::uint64_t s, bool lambda_is_zero);

/// Left fold of wedge. Throws DomainError on an empty list.
std::uint64_t wedge_fold(std::span<const std::uint64_t> values, const WedgeContext& ctx);

/// Structure constant C(m, e v t) * C(e v t, m - min(e, t)): the coefficient of
/// C(n, m) in the expansion of C(n, e) * C(n, t). Requires e v t <= m <= e + t.
mpz_class struct_const(std::uint64_t e, std::uint64_t t, std::uint64_t m, const WedgeContext& ctx);

}  // namespace lrs
