#pragma once

#include <cstdint>
#include <vector>

#include "tracecode/matrix.hpp"
#include "tracecode/poly.hpp"

namespace tracecode {

/// A linear code over GF(q), canonicalized: the stored generator matrix is
/// the unique RREF basis of the row space with zero rows removed, so two
/// codes are equal iff their canonical matrices are identical. The zero code
/// is a 0 x n matrix.
class LinearCode {
public:
    explicit LinearCode(const Matrix& generator);

    const FieldPtr& field() const { return canonical_.field(); }
    size_t length() const { return canonical_.cols(); }
    size_t dimension() const { return canonical_.rows(); }
    const Matrix& generator_matrix() const { return canonical_; }

private:
    Matrix canonical_;
};

/// Equality of row spaces. SpecMismatchError / LengthMismatchError when the
/// codes do not live in a common ambient space; different dimensions simply
/// compare unequal.
bool code_equal(const LinearCode& a, const LinearCode& b);

/// Codeword counts by Hamming weight, (A_0, ..., A_n); A_0 = 1 and the
/// counts sum to q^k.
struct WeightDistribution {
    std::vector<uint64_t> counts;

    size_t length() const { return counts.size() - 1; }
    uint64_t total() const;
};

/// Exact distribution by enumerating all q^k codewords. TooLargeError when
/// q^k > 2^20 (exactness over sampling, so the cap is a hard error).
WeightDistribution weight_distribution(const LinearCode& code);

/// Least i >= 1 with A_i > 0. ZeroCodeError for the zero code.
size_t min_distance(const LinearCode& code);

/// (q, n, f): the cyclic code of length n generated by f in GF(q)[x]/(x^n-1).
/// The given f must be nonzero; it is stored reduced mod x^n - 1 (the
/// reduction may be zero, e.g. for f = x^n - 1, which generates the zero
/// code).
struct CyclicSpec {
    CyclicSpec(FieldPtr field, int length, const Poly& f);

    FieldPtr field;
    int length;
    Poly f;  // reduced representative, degree < length
};

/// The code spanned by the n cyclic shifts of f's length-n coefficient
/// vector; equals the ideal generated by gcd(f, x^n - 1).
LinearCode cyclic_code(const CyclicSpec& spec);

/// Monic gcd(f, x^n - 1): the generator polynomial of the cyclic code.
Poly generator_polynomial(const CyclicSpec& spec);

/// Whether f generates the reference cyclic code, i.e. gcd(f, x^n - 1)
/// equals the reference generator polynomial.
bool generates_same_cyclic_code(const CyclicSpec& f_spec, const CyclicSpec& reference);

/// q-cyclotomic cosets mod n: orbits {j, jq, jq^2, ...}, minimal
/// representative first, cosets ordered by representative. Requires
/// gcd(n, q) = 1.
std::vector<std::vector<int64_t>> cyclotomic_cosets(int64_t n, int64_t q);

/// h(x) = (x^n - 1) / g(x), exact; NotDivisorError when g does not divide.
Poly check_polynomial(const Poly& g, int n);

}  // namespace tracecode
