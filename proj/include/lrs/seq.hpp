#pragma once

// Brute-force verification engine: generate linear recurrence sequences,
// multiply them termwise, and recover the minimal common annihilator of the
// resulting span by exact linear algebra over the base field.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lrs/fields.hpp"
#include "lrs/poly.hpp"

namespace lrs {

struct SequencePrefix {
  FieldDescriptor field;
  std::vector<FieldElement> terms;

  std::size_t size() const { return terms.size(); }
  friend bool operator==(const SequencePrefix&, const SequencePrefix&) = default;
};

/// a_{n+d} = -sum_{k<d} c_k a_{n+k} where char_poly = x^d + sum c_k x^k.
class LinearRecurrence {
 public:
  /// char_poly must be monic of degree d >= 1 with d initial terms in its field.
  LinearRecurrence(Polynomial char_poly, std::vector<FieldElement> initial);

  const Polynomial& char_poly() const { return char_poly_; }
  const std::vector<FieldElement>& initial() const { return initial_; }

 private:
  Polynomial char_poly_;
  std::vector<FieldElement> initial_;
};

/// The first n terms.
SequencePrefix generate(const LinearRecurrence& r, std::size_t n);

/// Recurrences with initial conditions e_0, ..., e_{d-1}: a basis of L(P).
std::vector<LinearRecurrence> impulse_basis(const Polynomial& p);

/// Termwise product, truncated to the shorter length.
SequencePrefix hadamard(const SequencePrefix& a, const SequencePrefix& b);

struct Membership {
  bool holds = true;
  /// The prefix was too short to test even one window.
  bool vacuous = false;

  explicit operator bool() const { return holds; }
};

/// Whether the recurrence of p holds on every window of the prefix.
Membership satisfies(const Polynomial& p, const SequencePrefix& s);

/// Monic annihilator of least degree for every sequence in the span of the
/// prefixes. Requires each prefix to have at least 2*degree_bound terms and
/// the span to be annihilated by some monic polynomial of degree <=
/// degree_bound; throws DomainError when no annihilator within the bound
/// fits every window of every prefix.
Polynomial min_annihilator_span(std::span<const SequencePrefix> prefixes, std::size_t degree_bound);

/// Rank of a list of equal-length prefixes, by exact elimination.
std::size_t rank_of(std::span<const SequencePrefix> rows);

/// All m-fold Hadamard products of basis elements (one from each list),
/// each as a prefix of length n.
std::vector<SequencePrefix> product_prefixes(const std::vector<std::vector<LinearRecurrence>>& bases, std::size_t n);

/// Rank of the length-n prefixes of all m-fold products. This is the
/// dimension of the product space once n reaches the product of the basis
/// sizes; shorter prefixes can only undercount.
std::size_t product_space_rank(const std::vector<std::vector<LinearRecurrence>>& bases, std::size_t n);

inline constexpr std::uint64_t kDefaultOracleBudget = 512;

struct OracleResult {
  /// Minimal annihilator of the product span: its characteristic polynomial.
  Polynomial annihilator;
  /// Rank of the product prefixes; equals deg(annihilator).
  std::size_t rank = 0;
  std::size_t prefix_length = 0;
  std::size_t product_count = 0;
};

/// Characteristic polynomial of L(P_1)...L(P_m) from sequences alone:
/// impulse bases, all products to length 2*prod deg, minimal annihilator
/// with bound prod deg, and a rank certificate. Throws BudgetExceeded when
/// prod deg exceeds `budget`.
OracleResult oracle_product_char_poly(const std::vector<Polynomial>& polys,
                                      std::uint64_t budget = kDefaultOracleBudget);

}  // namespace lrs
