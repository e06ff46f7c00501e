#pragma once

// Text syntax shared by the CLI and batch files.
//
// Fields:       Q | GF(p) | GF(q) | GF(p^k) | GF(p^k)/m(x)
// Polynomials:  sums and products of integers, a/b, [c0,c1,...], x, with ^
//               for non-negative integer powers and parentheses. Whitespace
//               is ignored. "2x" and "x(x+1)" multiply implicitly.

#include <string_view>

#include "lrs/fields.hpp"
#include "lrs/poly.hpp"

namespace lrs {

/// Throws ParseError (with caret position) or DomainError for a field that
/// parses but does not exist.
FieldDescriptor parse_field(std::string_view text);

/// Throws ParseError with the offending position.
Polynomial parse_polynomial(std::string_view text, const FieldDescriptor& field);

/// A constant expression, e.g. "3", "-1/2", "[0,1]".
FieldElement parse_element(std::string_view text, const FieldDescriptor& field);

}  // namespace lrs
