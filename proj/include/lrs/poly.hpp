#pragma once

// Dense univariate polynomials over a FieldDescriptor, plus factorization
// over finite fields (square-free, distinct-degree, equal-degree splitting)
// and rational-root factorization over Q.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrs/fields.hpp"

namespace lrs {

class Polynomial {
 public:
  /// The zero polynomial.
  explicit Polynomial(FieldDescriptor field) : field_(std::move(field)) {}
  /// Coefficients constant term first; trailing zeros are dropped.
  Polynomial(FieldDescriptor field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial x(const FieldDescriptor& field);
  /// x^n.
  static Polynomial monomial(const FieldDescriptor& field, std::size_t n);
  /// x - root.
  static Polynomial linear(const FieldElement& root);
  /// Integer coefficients (constant first), reduced into the field.
  static Polynomial from_integers(const FieldDescriptor& field, std::span<const long> coeffs);

  const FieldDescriptor& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  /// Coefficient of x^n (zero past the degree).
  FieldElement coeff(std::size_t n) const;
  /// Throws DomainError on the zero polynomial.
  const FieldElement& leading() const;
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const FieldElement& c) const;

  /// Quotient and remainder; throws DomainError for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }
  Polynomial operator/(const Polynomial& divisor) const { return divmod(divisor).first; }

  Polynomial derivative() const;
  FieldElement eval(const FieldElement& at) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  Polynomial pow(std::uint64_t e) const;
  /// this^e mod modulus, e given as a big integer.
  Polynomial powmod(const mpz_class& e, const Polynomial& modulus) const;
  /// Maps every coefficient through `f` into `target`.
  template <typename F>
  Polynomial map_coefficients(const FieldDescriptor& target, F&& f) const {
    std::vector<FieldElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return Polynomial(target, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Text form accepted back by parse_polynomial, e.g. "x^3+2*x+1".
  std::string to_string() const;

 private:
  void require_same_field(const Polynomial& other) const;
  void trim();

  FieldDescriptor field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic gcd (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// Canonical order used to sort factor lists: degree, then coefficients from
/// the leading term down in canonical element order.
bool canonical_less(const Polynomial& a, const Polynomial& b);

struct FactorPower {
  Polynomial factor;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Square-free decomposition of a monic nonzero polynomial: pairwise coprime
/// square-free factors with their multiplicities, sorted by multiplicity.
std::vector<FactorPower> squarefree_decompose(const Polynomial& p);

struct Factorization {
  FieldElement unit;
  /// Irreducible monic factors sorted canonically.
  std::vector<FactorPower> factors;
  /// Over Q: the monic part left after removing every rational root, when it
  /// is nonconstant. Always empty over finite fields.
  std::optional<Polynomial> remainder;

  /// unit * prod factor^mult (* remainder).
  Polynomial expand() const;
};

/// Complete factorization over finite fields (deterministic given `seed`;
/// the sorted output does not depend on it); rational roots over Q.
Factorization factor(const Polynomial& p, std::uint64_t seed = 0);

/// lcm of the irreducible factor degrees. Throws DomainError for a Q
/// factorization with a nonconstant remainder.
unsigned splitting_degree(const Factorization& f);

/// Independent irreducibility check over a finite field: no roots for degree
/// <= 3, otherwise gcd(f, x^(q^i) - x) = 1 for all i <= deg/2.
bool is_irreducible(const Polynomial& f);

/// Distinct roots of `f` lying in its own (finite) field, canonically sorted.
std::vector<FieldElement> roots_in_field(const Polynomial& f, std::uint64_t seed = 0);

}  // namespace lrs
