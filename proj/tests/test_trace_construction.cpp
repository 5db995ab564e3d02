#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "tracecode/trace_construction.hpp"

using namespace tracecode;
using tracecode::testutil::matrix_from_bits;
using tracecode::testutil::random_element;
using tracecode::testutil::Rng;

namespace {

DefiningSet example1_set() {
    FieldPtr f8 = Field::make(2, 3);
    FieldPtr f2 = Field::make(2, 1);
    FieldElement a = f8->gen();
    return DefiningSet(f8, f2,
                       {f8->one(), a, a.pow(2), f8->one(), a.pow(3), a.pow(4), a.pow(2)});
}

LinearCode example1_code() {
    FieldPtr f2 = Field::make(2, 1);
    return LinearCode(matrix_from_bits(f2, {{1, 0, 0, 1, 1, 0, 0},
                                            {0, 1, 0, 0, 1, 1, 0},
                                            {0, 0, 1, 0, 0, 1, 1}}));
}

int hamming_weight(const std::vector<FieldElement>& v) {
    int w = 0;
    for (const auto& e : v) w += !e.is_zero();
    return w;
}

}  // namespace

TEST_SUITE_BEGIN("trace_construction");

TEST_CASE("defining set validation") {
    FieldPtr f8 = Field::make(2, 3);
    FieldPtr f2 = Field::make(2, 1);
    CHECK_THROWS_AS(DefiningSet(f8, f2, {}), Error);
    FieldPtr f4 = Field::make(2, 2);
    CHECK_THROWS_AS(DefiningSet(f8, f4, {f8->one()}), DegreeNotDivisibleError);
}

TEST_CASE("trace code of the worked 7-element sets") {
    DefiningSet d = example1_set();
    CHECK(code_equal(trace_code(d), example1_code()));

    FieldPtr f16 = Field::make(2, 4);
    FieldPtr f2 = Field::make(2, 1);
    FieldElement a = f16->gen();
    DefiningSet d2(f16, f2, {f16->one(), a, a.pow(2), a.pow(3), a.pow(8), a.pow(7), a.pow(11)});
    LinearCode g2 = LinearCode(matrix_from_bits(f2, {{1, 0, 0, 0, 1, 1, 0},
                                                     {0, 1, 0, 0, 0, 1, 1},
                                                     {0, 0, 1, 0, 1, 0, 1},
                                                     {0, 0, 0, 1, 0, 1, 1}}));
    CHECK(code_equal(trace_code(d2), g2));
    // Brute force over all 16 codewords: row2 + row4 has weight 2, so this
    // [7,4] code has minimum distance 2.
    CHECK(weight_distribution(g2).counts == std::vector<uint64_t>{1, 0, 1, 6, 5, 2, 1, 0});
    CHECK(min_distance(g2) == 2);

    // All-zero defining set gives the zero code.
    DefiningSet zeros(f16, f2, std::vector<FieldElement>(5, f16->zero()));
    CHECK(trace_code(zeros).dimension() == 0);
}

TEST_CASE("trace code dimension is at most m, equal iff the set spans") {
    Rng rng(41);
    FieldPtr f2 = Field::make(2, 1);
    for (int rep = 0; rep < 20; ++rep) {
        FieldPtr big = Field::make(2, 4);
        std::vector<FieldElement> elems;
        std::uniform_int_distribution<size_t> ndist(1, 8);
        size_t n = ndist(rng);
        for (size_t i = 0; i < n; ++i) elems.push_back(random_element(big, rng));
        DefiningSet d(big, f2, elems);
        LinearCode code = trace_code(d);
        CHECK(code.dimension() <= d.trace_degree());
        Matrix coord_mat = generator_matrix(d, FieldBasis::polynomial(big, f2));
        CHECK((code.dimension() == d.trace_degree()) == (rank(coord_mat) == d.trace_degree()));
    }
}

TEST_CASE("generator matrix from a basis") {
    FieldPtr f8 = Field::make(2, 3);
    FieldPtr f2 = Field::make(2, 1);
    FieldBasis poly_basis = FieldBasis::polynomial(f8, f2);

    // Defining set = the basis itself: coordinate columns form the identity.
    DefiningSet basis_set(f8, f2, poly_basis.elements());
    Matrix ident = generator_matrix(basis_set, poly_basis);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(ident.at(i, j).is_one() == (i == j));

    // The worked defining set reproduces its generator matrix exactly.
    Matrix g = generator_matrix(example1_set(), poly_basis);
    CHECK(g == matrix_from_bits(f2, {{1, 0, 0, 1, 1, 0, 0},
                                     {0, 1, 0, 0, 1, 1, 0},
                                     {0, 0, 1, 0, 0, 1, 1}}));

    // The span equals trace_code for every basis.
    Rng rng(43);
    for (int rep = 0; rep < 15; ++rep) {
        std::vector<FieldElement> elems;
        for (int i = 0; i < 6; ++i) elems.push_back(random_element(f8, rng));
        DefiningSet d(f8, f2, elems);
        std::vector<FieldElement> belems;
        for (int i = 0; i < 3; ++i) belems.push_back(random_element(f8, rng));
        try {
            FieldBasis basis(f8, f2, belems);
            CHECK(code_equal(LinearCode(generator_matrix(d, basis)), trace_code(d)));
        } catch (const SingularBasisError&) {
        }
    }
}

TEST_CASE("codewords and zero-trace counts") {
    DefiningSet d = example1_set();
    FieldPtr f8 = d.big;

    auto zero_word = codeword(f8->zero(), d);
    CHECK(hamming_weight(zero_word) == 0);
    CHECK(count_zero_traces(f8->zero(), d) == d.length());

    // x = 1 picks out row 1 of the generator matrix; traces computed by the
    // expansion oracle: Tr(1)=1, Tr(a)=Tr(a^2)=Tr(a^4)=0, Tr(a^3)=1.
    auto row1 = codeword(f8->one(), d);
    std::vector<int> expected{1, 0, 0, 1, 1, 0, 0};
    for (size_t i = 0; i < row1.size(); ++i) CHECK(row1[i].coeffs()[0] == expected[i]);

    Rng rng(47);
    for (int rep = 0; rep < 25; ++rep) {
        FieldElement x = random_element(f8, rng);
        CHECK(hamming_weight(codeword(x, d)) + count_zero_traces(x, d) == d.length());
        // Linearity.
        FieldElement z = random_element(f8, rng);
        auto wx = codeword(x, d), wz = codeword(z, d), wxz = codeword(x + z, d);
        for (size_t i = 0; i < d.length(); ++i) CHECK(wxz[i] == wx[i] + wz[i]);
    }
}

TEST_CASE("character sums are exact cyclotomic-integer values") {
    // Canonical form subtracts the minimum count.
    CharacterSum cs(3, {5, 2, 2});
    CHECK(cs.counts() == std::vector<int64_t>{3, 0, 0});
    CHECK(cs.integer_value() == 3);

    CharacterSum not_integer(3, {1, 2, 0});
    CHECK_FALSE(not_integer.integer_value().has_value());

    // p = 2: every count vector is an integer, counts[0] - counts[1].
    CharacterSum p2(2, {4, 7});
    CHECK(p2.integer_value() == -3);

    FieldPtr f8 = Field::make(2, 3);
    // Tallying the whole field: zero contributes trace 0; the sum over all
    // characters of a nontrivial group is 0, so counts end up equal.
    std::vector<FieldElement> all;
    for (uint64_t k = 0; k < 8; ++k) all.push_back(f8->from_index(k));
    CHECK(character_sum(all).integer_value() == 0);
}

TEST_CASE("weight via character sum") {
    DefiningSet d = example1_set();
    FieldPtr f8 = d.big;
    const int64_t n = static_cast<int64_t>(d.length());

    // x = 0: every summand is 1, so the sum is (q-1) n and the weight 0.
    CHECK(weight_via_character_sum(f8->zero(), d) == 0);

    for (uint64_t k = 0; k < f8->order(); ++k) {
        FieldElement x = f8->from_index(k);
        int64_t direct = hamming_weight(codeword(x, d));
        CHECK(weight_via_character_sum(x, d) == direct);
        // q = 2 specialization of the identity: sum = n - 2 wt.
        std::vector<FieldElement> multiset;
        for (const auto& di : d.elements) multiset.push_back(x * di);
        CHECK(character_sum(multiset).integer_value() == n - 2 * direct);
    }
}

TEST_CASE("permuting the set permutes coordinates, weights unchanged") {
    Rng rng(53);
    FieldPtr big = Field::make(3, 2);
    FieldPtr f3 = Field::make(3, 1);
    std::vector<FieldElement> elems;
    for (int i = 0; i < 6; ++i) elems.push_back(random_element(big, rng));
    DefiningSet d(big, f3, elems);

    std::vector<FieldElement> shuffled = elems;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    DefiningSet d2(big, f3, shuffled);

    CHECK(weight_distribution(trace_code(d)).counts ==
          weight_distribution(trace_code(d2)).counts);
}

TEST_SUITE_END();
