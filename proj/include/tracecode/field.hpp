#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tracecode/errors.hpp"

namespace tracecode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of GF(p^d): the coefficient sequence of its residue polynomial
/// in the modulus root, ascending powers, length d, entries in [0, p).
/// Elements are immutable values and may be shared freely across threads.
class FieldElement {
public:
    const FieldPtr& field() const { return field_; }
    const std::vector<int64_t>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    /// Position of the element in the ascending coefficient-sequence
    /// enumeration of the field: coeffs[0] + coeffs[1]*p + coeffs[2]*p^2 + ...
    uint64_t index() const;

    /// Any integer exponent; negative exponents go through the inverse.
    FieldElement pow(int64_t e) const;
    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    friend class Field;
    FieldElement(FieldPtr f, std::vector<int64_t> c) : field_(std::move(f)), coeffs_(std::move(c)) {}

    FieldPtr field_;
    std::vector<int64_t> coeffs_;
};

/// Immutable description of GF(p^d) plus the arithmetic against its monic
/// irreducible modulus. Construction validates primality of p and
/// irreducibility of the modulus; equal (p, d, modulus) triples are
/// interchangeable. Instances are interned, so make() with the same spec
/// returns the same object.
///
/// All lazily built lookup tables (discrete logs, Frobenius images,
/// embeddings, ...) are guarded internally; every public operation is a pure
/// function of its inputs.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Default modulus: the first monic irreducible polynomial of degree d
    /// over GF(p) in ascending coefficient-sequence order. Shipped for
    /// p in {2, 3, 5, 7} and d <= 16; NoDefaultModulusError outside that.
    static FieldPtr make(int64_t p, int d);
    static FieldPtr make(int64_t p, int d, const std::vector<int64_t>& modulus);

    int64_t characteristic() const { return p_; }
    int degree() const { return d_; }
    /// p^d
    uint64_t order() const { return order_; }
    /// Ascending coefficients, length d+1, monic.
    const std::vector<int64_t>& modulus() const { return modulus_; }

    bool same_spec(const Field& other) const;
    /// "p=<p>,d=<d>,modulus=<c0,...,cd>"
    std::string spec_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x: the root of the modulus that defines the polynomial
    /// basis {1, gen, gen^2, ...}.
    FieldElement gen() const;
    /// Coefficients are reduced mod p; shorter sequences are zero-padded.
    FieldElement element(std::vector<int64_t> coeffs) const;
    FieldElement from_index(uint64_t k) const;

    /// First element of full multiplicative order p^d - 1 in ascending
    /// coefficient-sequence order (cached; deterministic).
    FieldElement generator() const;

    /// Discrete logs w.r.t. generator() are tabulated for orders <= 2^20.
    bool dlog_available() const;
    /// Exponent k with generator()^k == a. ZeroElementError for zero,
    /// TooLargeError when no table can be built.
    uint64_t dlog(const FieldElement& a) const;

    // --- low-level helpers -------------------------------------------------
    // Index-space arithmetic used by enumeration-heavy code paths. Backed by
    // full tables for orders <= 512, computed from elements otherwise.
    uint64_t add_index(uint64_t a, uint64_t b) const;
    uint64_t mul_index(uint64_t a, uint64_t b) const;
    uint64_t neg_index(uint64_t a) const;
    uint64_t inv_index(uint64_t a) const;

    /// Images of the polynomial basis {gen^i} under x -> x^(p^s), cached per s.
    const std::vector<FieldElement>& frobenius_basis_images(int s) const;
    /// Relative traces Tr_{GF(p^d)/GF(p^s)}(gen^i), cached per s.
    const std::vector<FieldElement>& trace_basis_images(int s) const;
    /// Prime factors of p^d - 1, each listed once.
    const std::vector<uint64_t>& group_order_prime_factors() const;

    /// Data of the canonical embedding of a ground field GF(p^s) into this
    /// field: the chosen root of the ground modulus and an exact solver for
    /// coordinates over the ground field.
    struct EmbedData {
        FieldPtr ground;
        std::vector<FieldElement> root_pows;  // root^0 .. root^(s-1)
        std::vector<int64_t> coord_solver;    // (d x d) inverse matrix mod p, row-major
    };
    const EmbedData& embedding_from(const FieldPtr& ground) const;

private:
    Field(int64_t p, int d, std::vector<int64_t> modulus);

    std::vector<int64_t> reduce(std::vector<int64_t> c) const;  // mod modulus, mod p
    FieldElement make_element(std::vector<int64_t> c) const;
    void build_index_tables() const;  // callers hold mu_

    int64_t p_;
    int d_;
    std::vector<int64_t> modulus_;
    uint64_t order_;

    mutable std::recursive_mutex mu_;
    mutable std::optional<FieldElement> generator_;
    mutable std::vector<uint32_t> dlog_table_;
    mutable bool dlog_built_ = false;
    mutable std::vector<uint64_t> order_factors_;
    mutable std::map<int, std::vector<FieldElement>> frob_images_;
    mutable std::map<int, std::vector<FieldElement>> trace_images_;
    mutable std::map<std::string, EmbedData> embeddings_;
    mutable std::vector<uint32_t> add_tab_, mul_tab_;
    mutable std::vector<uint32_t> neg_tab_, inv_tab_;
    mutable std::atomic<bool> index_tabs_ready_{false};

    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    friend class FieldElement;
};

/// a^(p^(s*e)), i.e. e applications of the GF(p^s)-Frobenius. Requires s | d.
FieldElement frobenius(const FieldElement& a, int base_degree, int64_t iterations);

/// Relative trace onto the subfield GF(p^s) embedded in a's field:
/// Tr(a) = a + a^q + ... + a^(q^(m-1)) with q = p^s, m = d/s. The result is
/// an element of a's field satisfying result^q == result.
FieldElement rel_trace(const FieldElement& a, int subfield_degree);

/// Absolute trace residue: Tr_{GF(p^d)/GF(p)}(a) as an integer in [0, p).
int64_t abs_trace(const FieldElement& a);

/// Canonical embedding of a standalone ground field element into `big`.
/// The ground modulus root maps to its first root in `big` in ascending
/// coefficient-sequence order; the map is a field homomorphism.
FieldElement embed(const FieldElement& a_small, const FieldPtr& big);

/// Inverse of embed on the image subfield. NotInSubfieldError when
/// a^(p^s) != a.
FieldElement project(const FieldElement& a_big, const FieldPtr& ground);
FieldElement project(const FieldElement& a_big, int subfield_degree);

/// Coordinates of `a` over the ground field w.r.t. the basis
/// {1, gen, ..., gen^(m-1)} of a's field, m = d/s. Exact, unique.
std::vector<FieldElement> ground_coordinates(const FieldElement& a, const FieldPtr& ground);

/// Smallest t >= 1 with a^t == 1. ZeroElementError for a == 0.
uint64_t mult_order(const FieldElement& a);

FieldElement find_generator(const FieldPtr& field);

}  // namespace tracecode
