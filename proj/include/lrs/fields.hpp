#pragma once

// Exact field arithmetic: prime fields GF(p), extensions GF(p^k) represented
// as GF(p)[x]/(m(x)), and the rationals. Elements carry their field; mixing
// elements of different fields raises FieldMismatch.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

namespace lrs {

bool is_prime(std::uint64_t n);

/// Inverse of a modulo the prime p (a must be nonzero mod p).
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

enum class FieldKind { kRationals, kFinite };

/// Value-semantic description of a field. Prime fields are finite fields of
/// degree 1 with no stored modulus; equality compares p, k and modulus.
class FieldDescriptor {
 public:
  static FieldDescriptor rationals();
  /// GF(p^k) with the given monic modulus (constant term first, length k+1).
  /// A modulus of degree 1 yields the prime field. Throws DomainError when p
  /// is not prime or the modulus is not monic irreducible.
  static FieldDescriptor finite(std::uint64_t p, std::vector<std::uint64_t> modulus);

  FieldKind kind() const;
  bool is_rationals() const { return kind() == FieldKind::kRationals; }
  bool is_finite() const { return kind() == FieldKind::kFinite; }
  bool is_prime_field() const { return is_finite() && degree() == 1; }

  std::uint64_t characteristic() const;
  unsigned degree() const;
  /// Empty for prime fields and Q.
  std::span<const std::uint64_t> modulus() const;
  /// Whether the modulus is the canonical one produced by make_field.
  bool is_canonical() const;
  /// p^k; throws for Q.
  mpz_class order() const;
  /// "Q", "GF(5)", "GF(2^3)", or "GF(2^3)/x^3+x^2+1" for a non-canonical modulus.
  std::string name() const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);
  friend FieldDescriptor make_field(std::uint64_t characteristic, unsigned degree);

  struct Impl;
  const Impl& impl() const { return *impl_; }

 private:
  explicit FieldDescriptor(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Q for characteristic 0 (degree must be 1); otherwise GF(p^k) whose modulus
/// is the lexicographically smallest monic irreducible of degree k over GF(p)
/// (coefficients compared from x^(k-1) down to the constant term).
FieldDescriptor make_field(std::uint64_t characteristic, unsigned degree = 1);

/// Monic irreducibility over GF(p) of a coefficient vector (constant first).
bool is_irreducible_mod_p(std::span<const std::uint64_t> poly, std::uint64_t p);

class FieldElement {
 public:
  using Coefficients = boost::container::small_vector<std::uint64_t, 2>;

  static FieldElement zero(const FieldDescriptor& field);
  static FieldElement one(const FieldDescriptor& field);
  static FieldElement from_integer(const FieldDescriptor& field, const mpz_class& value);
  static FieldElement from_integer(const FieldDescriptor& field, long value) {
    return from_integer(field, mpz_class(value));
  }
  /// Q only.
  static FieldElement from_rational(const FieldDescriptor& field, const mpq_class& value);
  /// Finite fields only: c0 + c1*g + ... with g the class of x; reduced mod p
  /// and mod the field modulus.
  static FieldElement from_coefficients(const FieldDescriptor& field, std::span<const std::uint64_t> coeffs);
  /// The class of x in GF(p)[x]/(m); for prime fields this is 0.
  static FieldElement generator(const FieldDescriptor& field);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// Finite field coordinates, length = field degree.
  std::span<const std::uint64_t> coefficients() const { return {coeffs_.data(), coeffs_.size()}; }
  /// Q only.
  const mpq_class& rational() const { return rational_; }
  /// Element of GF(p) (or of Z for Q) embedded in its field.
  bool in_prime_subfield() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Throws DomainError for zero.
  FieldElement inverse() const;
  FieldElement pow(const mpz_class& exponent) const;
  FieldElement pow(std::uint64_t exponent) const { return pow(mpz_class(static_cast<unsigned long>(exponent))); }
  /// a^p; identity on Q.
  FieldElement frobenius() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Canonical order: finite elements compare as base-p integers (highest
  /// coordinate most significant); rationals compare numerically.
  friend std::strong_ordering canonical_compare(const FieldElement& a, const FieldElement& b);

  /// "3", "-1/2", or "[c0,c1,...]" for an extension element outside GF(p).
  std::string to_string() const;

 private:
  FieldElement(FieldDescriptor field) : field_(std::move(field)) {}
  void require_same_field(const FieldElement& other) const;

  FieldDescriptor field_;
  Coefficients coeffs_;
  mpq_class rational_;
};

struct CanonicalLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const { return canonical_compare(a, b) < 0; }
};

/// [a, a^p, a^(p^2), ...] up to the first repetition. Throws DomainError on Q.
std::vector<FieldElement> frobenius_orbit(const FieldElement& a);

}  // namespace lrs
