#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tracecode/bases.hpp"
#include "tracecode/codes.hpp"

namespace tracecode {

/// An ordered multiset D = (d_1, ..., d_n) of elements of a big field
/// GF(q^m), together with the ground field GF(q) the traces land in.
/// Duplicates are honored positionally.
struct DefiningSet {
    DefiningSet(FieldPtr big, FieldPtr ground, std::vector<FieldElement> elements);

    FieldPtr big;
    FieldPtr ground;
    std::vector<FieldElement> elements;

    size_t length() const { return elements.size(); }
    /// m = [big : ground]
    size_t trace_degree() const;
};

/// The codeword (Tr(x d_1), ..., Tr(x d_n)) over the ground field.
std::vector<FieldElement> codeword(const FieldElement& x, const DefiningSet& d);

/// N_x(0) = |{i : Tr(x d_i) = 0}|; the Hamming weight of codeword(x) is
/// n - N_x(0).
size_t count_zero_traces(const FieldElement& x, const DefiningSet& d);

/// The linear code {codeword(x) : x in GF(q^m)}; dimension at most m.
LinearCode trace_code(const DefiningSet& d);

/// The m x n ground-field matrix whose column i holds coordinates(d_i, basis);
/// its row space equals trace_code(d) for every basis.
Matrix generator_matrix(const DefiningSet& d, const FieldBasis& basis);

/// An exact value in the cyclotomic integer ring Z[zeta_p]: counts[t] is the
/// number of summands zeta_p^t. Canonical form subtracts the minimum count
/// from every entry (using 1 + zeta + ... + zeta^(p-1) = 0), so
/// min(counts) == 0. The value is a rational integer iff counts[1..p-1] are
/// all equal, and then equals counts[0] - counts[1].
class CharacterSum {
public:
    CharacterSum(int64_t p, std::vector<int64_t> counts);

    int64_t characteristic() const { return p_; }
    const std::vector<int64_t>& counts() const { return counts_; }
    std::optional<int64_t> integer_value() const;

    friend bool operator==(const CharacterSum& a, const CharacterSum& b);
    friend bool operator!=(const CharacterSum& a, const CharacterSum& b) { return !(a == b); }

private:
    int64_t p_;
    std::vector<int64_t> counts_;
};

/// Sum of canonical additive character values over a multiset of big-field
/// elements: tallies absolute traces into the zeta_p count vector.
CharacterSum character_sum(const std::vector<FieldElement>& elements);

/// Hamming weight of codeword(x) evaluated through the exact character-sum
/// identity wt = ((q-1) n - sum_{y in GF(q)*} chi(y x D)) / q. The sum is
/// required to be a rational integer and the division exact;
/// NonIntegerSumError otherwise (it would signal an arithmetic bug).
int64_t weight_via_character_sum(const FieldElement& x, const DefiningSet& d);

}  // namespace tracecode
