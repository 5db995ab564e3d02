#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tracecode/field.hpp"

namespace tracecode {

/// Polynomial over one Field, ascending coefficients, canonical form with no
/// trailing zero coefficients. degree() of the zero polynomial is -1.
class Poly {
public:
    explicit Poly(FieldPtr f) : field_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<FieldElement> coeffs);
    /// Convenience: integer coefficients taken as GF(p) residues (constants
    /// of the coefficient field).
    static Poly from_ints(const FieldPtr& f, const std::vector<int64_t>& coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// Zero element beyond the degree.
    FieldElement coeff(int i) const;
    FieldElement leading_coeff() const;  // DivisionByZeroError on zero poly
    bool is_monic() const;
    Poly to_monic() const;

    FieldElement eval(const FieldElement& x) const;
    /// Multiplication by x^k.
    Poly shifted(int k) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

/// Exact Euclidean division; the divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd; poly_gcd(f, 0) is the monic scaling of f.
Poly poly_gcd(Poly a, Poly b);

/// x^e * h(1/x) normalized monic, with e = max(deg h, degree_hint).
Poly reciprocal(const Poly& h, int degree_hint = -1);

/// x^n - 1 over the given field, stored as x^n + (p-1).
Poly x_pow_minus_one(const FieldPtr& f, int n);

/// Minimal polynomial of `a` over the ground field GF(p^s): the monic
/// product of (x - c) over the Frobenius orbit of a, coefficients projected
/// into the ground field.
Poly min_poly(const FieldElement& a, const FieldPtr& ground);
Poly min_poly(const FieldElement& a, int subfield_degree);

}  // namespace tracecode
