#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tracecode/trace_construction.hpp"

namespace tracecode {

/// Defining set of the code spanned by the rows of G (k x n over GF(q)):
/// with m = max{k, ceil(log_q n)} and the polynomial basis {1, g, ..., g^(m-1)}
/// of GF(q^m), d_i = sum_j G[j][i] g^(j-1). All k rows are used as given, so
/// rank-deficient inputs are honored. Guarantee: trace_code(result) equals
/// the row space of G.
DefiningSet defining_set_from_matrix(const Matrix& g);

/// Defining set of a cyclic code from a normal element of GF(q^n):
/// d = sum_{j=1..n} f_{n-j} alpha^(q^j) (with alpha^(q^n) = alpha, so the
/// j = n term contributes f_0 alpha), returned as the ordered Frobenius
/// orbit (d, d^q, ..., d^(q^(n-1))). Works for any length, including
/// gcd(n, q) != 1. When alpha is omitted, find_normal_element picks one;
/// a supplied alpha failing the normality test raises NotNormalError.
DefiningSet cyclic_defining_set(const CyclicSpec& spec);
DefiningSet cyclic_defining_set(const CyclicSpec& spec, const FieldElement& alpha);

/// Multiplicative order of q modulo n; GcdNotOneError when gcd(q, n) != 1.
int64_t ord_mod(int64_t q, int64_t n);

/// Data for the codeword-family representation of a cyclic code with check
/// polynomial h, gcd(n, q) = 1: m = ord_n(q), beta = gamma^((q^m-1)/n) a
/// primitive n-th root of unity, and J the minimal coset representatives
/// with h*(x) = prod_{j in J} m_{beta^j}(x).
struct WolfmannSpec {
    FieldPtr ground;
    int length;
    int m;
    FieldPtr big;
    FieldElement beta;
    std::vector<int64_t> coset_reps;  // J
};

WolfmannSpec wolfmann_spec_from_check(const Poly& h, int n);

/// Enumerates all tuples (a_j)_{j in J} over GF(q^m) and collects the
/// codewords (Tr(f_a(beta^0)), ..., Tr(f_a(beta^(n-1)))) with
/// f_a(x) = sum_j a_j x^j. TooLargeError when q^(m |J|) > 2^20.
/// The result equals the cyclic code with generator (x^n - 1)/h.
LinearCode wolfmann_code(const WolfmannSpec& spec);

}  // namespace tracecode
