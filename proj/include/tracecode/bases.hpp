#pragma once

#include <vector>

#include "tracecode/field.hpp"

namespace tracecode {

/// A basis of a big field GF(p^(s*m)) over a ground field GF(p^s): m elements
/// that are linearly independent over the embedded ground field. Independence
/// is verified at construction (SingularBasisError otherwise).
class FieldBasis {
public:
    FieldBasis(FieldPtr big, FieldPtr ground, std::vector<FieldElement> elements);

    /// {1, gen, gen^2, ..., gen^(m-1)} -- the polynomial basis in the big
    /// field's modulus root, which is a ground-field basis for every
    /// intermediate ground field.
    static FieldBasis polynomial(const FieldPtr& big, const FieldPtr& ground);

    const FieldPtr& big() const { return big_; }
    const FieldPtr& ground() const { return ground_; }
    size_t size() const { return elements_.size(); }  // m
    const std::vector<FieldElement>& elements() const { return elements_; }

    friend bool operator==(const FieldBasis& a, const FieldBasis& b);
    friend bool operator!=(const FieldBasis& a, const FieldBasis& b) { return !(a == b); }

private:
    FieldPtr big_;
    FieldPtr ground_;
    std::vector<FieldElement> elements_;
};

/// The unique ground-field coordinates of `a` w.r.t. the basis, obtained by
/// solving the m x m linear system over the ground field.
std::vector<FieldElement> coordinates(const FieldElement& a, const FieldBasis& basis);

/// The dual basis {b_j} with Tr(a_i b_j) = [i == j], computed by inverting
/// the trace Gram matrix T_ij = Tr(a_i a_j) over the ground field.
FieldBasis dual_basis(const FieldBasis& basis);

/// Whether the Frobenius conjugates {a, a^q, ..., a^(q^(m-1))} are linearly
/// independent over the ground field.
bool is_normal_element(const FieldElement& a, const FieldPtr& ground);

/// First normal element in ascending generator-power order g^0, g^1, g^2, ...
/// (cached per field pair; normal elements always exist).
FieldElement find_normal_element(const FieldPtr& big, const FieldPtr& ground);
FieldElement find_normal_element(const FieldPtr& big, int subfield_degree);

}  // namespace tracecode
