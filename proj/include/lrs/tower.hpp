#pragma once

// Moving elements between a field and its extensions: canonical embeddings,
// descent back to a subfield, conjugates over a subfield, and roots of base
// polynomials in a splitting field.
//
// Embeddings GF(p^K) -> GF(p^N) send the generator of the source to the
// first root (canonical order) of the source modulus in the target that is
// compatible with the embeddings of every canonical subfield GF(p^J), J | K.
// This makes embed(embed(a, M), N) == embed(a, N) for any chain K | M | N.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrs/fields.hpp"
#include "lrs/poly.hpp"

namespace lrs {

/// The canonical field GF(p^(k*degree)) over base GF(p^k); Q when base is Q
/// (degree must then be 1).
FieldDescriptor splitting_field(const FieldDescriptor& base, unsigned degree);

/// Whether `sub` embeds in `field` (same characteristic, degree divides).
bool is_subfield(const FieldDescriptor& sub, const FieldDescriptor& field);

/// Image of `a` under the canonical embedding into `target`. Throws
/// DomainError when the degree does not divide or characteristics differ.
FieldElement embed(const FieldElement& a, const FieldDescriptor& target);
Polynomial embed(const Polynomial& p, const FieldDescriptor& target);

/// Preimage of `b` under the canonical embedding of `sub`, if b lies in it.
std::optional<FieldElement> try_descend(const FieldElement& b, const FieldDescriptor& sub);
/// As try_descend, throwing DescentError when b is not in the subfield.
FieldElement descend(const FieldElement& b, const FieldDescriptor& sub);
Polynomial descend(const Polynomial& p, const FieldDescriptor& sub);

/// [a, a^q, a^(q^2), ...] with q = |over|, up to the first repetition.
/// Over Q this is [a].
std::vector<FieldElement> conjugates(const FieldElement& a, const FieldDescriptor& over);

/// prod over conjugates c of a relative to `over` of (X - c), re-expressed
/// over `over`. Throws DescentError if a coefficient fails to descend.
Polynomial minimal_poly_of_element(const FieldElement& a, const FieldDescriptor& over);

struct SplitRoots {
  FieldDescriptor field;
  /// Nonzero roots with multiplicity, canonically sorted.
  std::vector<std::pair<FieldElement, std::uint64_t>> roots;
  /// Multiplicity of the factor x.
  std::uint64_t zero_multiplicity = 0;
};

/// All roots of a factored base polynomial inside splitting_field(base, D).
/// Every factor degree must divide D; a Q factorization must have no remainder.
SplitRoots roots_in_splitting_field(const Factorization& f, unsigned degree, std::uint64_t seed = 0);

}  // namespace lrs
