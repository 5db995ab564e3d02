#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tracecode/bases.hpp"
#include "tracecode/codes.hpp"
#include "tracecode/trace_construction.hpp"

namespace tracecode {

// Text formats.
//   field spec      p=2,d=3,modulus=1,1,0,1
//   element         [c0,c1,...] coefficient form, or power form 0 / 1 / g / g^k
//   polynomial      ascending comma-separated coefficient tokens: 1,1,0,1
//   matrix          one row per line, entries space-separated (digits for
//                   prime q, bracketed coefficient form otherwise)
//   defining set    field spec line, optional "ground=<spec>" line, then
//                   comma-separated element tokens
// Bare integer element tokens are read as the base-p encoding of the
// coefficient sequence, which for prime fields is just the residue digit.

std::string format_field_spec(const Field& f);
FieldPtr parse_field_spec(const std::string& text);

/// "p,d" or "p,d,c0,...,cd" (the --field flag syntax).
FieldPtr parse_field_flag(const std::string& text);

std::string format_element_coeffs(const FieldElement& a);
/// Power form when a discrete-log table exists, coefficient form otherwise.
std::string format_element(const FieldElement& a);
FieldElement parse_element(const std::string& token, const FieldPtr& f);

std::string format_poly(const Poly& p);
Poly parse_poly(const std::string& text, const FieldPtr& f);

/// Comma-separated element strings, coefficient or power notation.
std::string format_basis(const FieldBasis& b);
FieldBasis parse_basis(const std::string& text, const FieldPtr& big, const FieldPtr& ground);

std::string format_matrix(const Matrix& m);
Matrix parse_matrix(std::istream& in, const FieldPtr& f);

std::string format_defining_set(const DefiningSet& d);
DefiningSet parse_defining_set(std::istream& in);
/// Elements only, against explicitly given fields.
DefiningSet parse_defining_set_elements(const std::string& text, const FieldPtr& big,
                                        const FieldPtr& ground);

/// "1 + 7z^3 + 7z^4 + z^7"
std::string format_weight_enumerator(const WeightDistribution& w);
/// "[7,4,3]"; the distance entry is omitted for the zero code.
std::string format_code_params(const LinearCode& c);

}  // namespace tracecode
