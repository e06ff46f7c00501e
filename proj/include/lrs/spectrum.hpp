#pragma once

// The space L(P) of linear recurrence sequences with characteristic
// polynomial P, stored as data: the multiplicity of the root 0 plus a map
// from nonzero roots (in a splitting field of the base) to multiplicities.
//
// Sums and products of spaces become operations on these maps:
//   <l>_s + <l>_t = <l>_{max(s,t)}
//   <l>_i <m>_j   = <l*m>_{i ^ j}
//   <0>_t <l>_s   = <0>_{t ^_l s}

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "lrs/fields.hpp"
#include "lrs/poly.hpp"

namespace lrs {

class RootSpectrum {
 public:
  using Entries = std::map<FieldElement, std::uint64_t, CanonicalLess>;

  /// The zero space over `base`, with roots living in splitting_field(base, degree).
  explicit RootSpectrum(FieldDescriptor base, unsigned splitting_degree = 1);

  const FieldDescriptor& base() const { return base_; }
  /// splitting_field(base, splitting_degree()).
  const FieldDescriptor& field() const { return field_; }
  unsigned splitting_degree() const { return splitting_degree_; }
  std::uint64_t zero_mult() const { return zero_mult_; }
  const Entries& entries() const { return entries_; }

  void set_zero_mult(std::uint64_t s) { zero_mult_ = s; }
  /// entries[root] = max(entries[root], mult). Zero multiplicities are ignored;
  /// a zero root or a root outside field() throws DomainError.
  void raise(const FieldElement& root, std::uint64_t mult);

  /// Multiplicity of `root` (0 when absent).
  std::uint64_t multiplicity(const FieldElement& root) const;
  /// Sum of nonzero-root multiplicities.
  std::uint64_t nonzero_dimension() const;
  /// zero_mult + nonzero_dimension = deg of the characteristic polynomial.
  std::uint64_t dimension() const { return zero_mult_ + nonzero_dimension(); }
  bool is_zero_space() const { return dimension() == 0; }

  /// Entries form full conjugacy orbits over base() with constant multiplicity.
  bool is_orbit_closed() const;

  /// Debug form: base field, splitting degree, zero multiplicity and
  /// canonically sorted [element, multiplicity] pairs.
  nlohmann::json to_json() const;

  friend bool operator==(const RootSpectrum& a, const RootSpectrum& b);

 private:
  FieldDescriptor base_;
  FieldDescriptor field_;
  unsigned splitting_degree_;
  std::uint64_t zero_mult_ = 0;
  Entries entries_;
};

/// L(P) for monic nonzero P. The splitting degree is the lcm of P's factor
/// degrees, or `degree` when given (it must be a multiple of that lcm).
/// Over Q every root must be rational (IrrationalRoots otherwise).
RootSpectrum from_poly(const Polynomial& p, std::uint64_t seed = 0);
RootSpectrum from_poly(const Polynomial& p, unsigned degree, std::uint64_t seed);

/// x^zero_mult * prod over orbits of (minimal polynomial)^mult, over base().
/// Throws DescentError if the entries are not orbit-closed.
Polynomial to_poly(const RootSpectrum& spec);

/// The same spectrum with roots moved into splitting_field(base, degree).
RootSpectrum reembed(const RootSpectrum& spec, unsigned degree);

RootSpectrum spec_add(const RootSpectrum& a, const RootSpectrum& b);
RootSpectrum spec_mul(const RootSpectrum& a, const RootSpectrum& b);

struct OmegaClass {
  FieldElement product_value;
  std::uint64_t best = 0;
  /// One root tuple (one root per input spectrum) attaining `best`.
  std::vector<FieldElement> witness;
};

struct UpsilonResult {
  RootSpectrum spectrum;
  /// Classes in canonical order of product value.
  std::vector<OmegaClass> classes;
  std::uint64_t tuple_count = 0;
};

inline constexpr std::uint64_t kDefaultTupleCap = 1'000'000;

/// Groups all root tuples by their product and keeps, per product, the
/// maximum folded wedge of the tuple's multiplicities. Inputs must have no
/// zero root; an empty input spectrum gives the empty result. Throws
/// BudgetExceeded when the number of tuples exceeds `cap`.
UpsilonResult upsilon_mary(const std::vector<RootSpectrum>& specs, std::uint64_t cap = kDefaultTupleCap);

struct ProductOptions {
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultTupleCap;
};

struct ProductCharPoly {
  /// x^rho * Upsilon(Q_1, ..., Q_m) over the base field.
  Polynomial result;
  /// The same polynomial obtained by folding spec_mul.
  Polynomial fold_result;
  std::uint64_t rho = 0;
  /// 1-based indices i with Q_i = 1.
  std::vector<std::size_t> theta;
  /// s_i: multiplicity of x in P_i.
  std::vector<std::uint64_t> zero_mults;
  /// Q_i = P_i / x^(s_i).
  std::vector<Polynomial> nonzero_parts;
  /// Common splitting degree of the Q_i.
  unsigned splitting_degree = 1;
  UpsilonResult upsilon;
};

/// Characteristic polynomial of the product space L(P_1)...L(P_m) by the
/// rho/Theta rule plus upsilon_mary, cross-checked against the spec_mul fold
/// (an Error is raised if the two disagree).
ProductCharPoly product_char_poly(const std::vector<Polynomial>& polys, const ProductOptions& options = {});

/// Fold-only path: to_poly of L(P_1) * ... * L(P_m) via spec_mul, with no
/// tuple enumeration.
Polynomial product_char_poly_fold(const std::vector<Polynomial>& polys, std::uint64_t seed = 0);

}  // namespace lrs
