#include <numeric>

#include "doctest.h"
#include "test_util.hpp"
#include "tracecode/representations.hpp"

using namespace tracecode;
using tracecode::testutil::matrix_from_bits;
using tracecode::testutil::random_matrix;
using tracecode::testutil::Rng;

TEST_SUITE_BEGIN("representations");

TEST_CASE("defining set from a generator matrix") {
    FieldPtr f2 = Field::make(2, 1);

    Matrix g1 = matrix_from_bits(f2, {{1, 0, 0, 1, 1, 0, 0},
                                      {0, 1, 0, 0, 1, 1, 0},
                                      {0, 0, 1, 0, 0, 1, 1}});
    DefiningSet d1 = defining_set_from_matrix(g1);
    CHECK(d1.big->order() == 8);
    std::vector<uint64_t> powers1;
    for (const auto& e : d1.elements) powers1.push_back(d1.big->dlog(e));
    CHECK(powers1 == std::vector<uint64_t>{0, 1, 2, 0, 3, 4, 2});
    CHECK(code_equal(trace_code(d1), LinearCode(g1)));

    Matrix g2 = matrix_from_bits(f2, {{1, 0, 0, 0, 1, 1, 0},
                                      {0, 1, 0, 0, 0, 1, 1},
                                      {0, 0, 1, 0, 1, 0, 1},
                                      {0, 0, 0, 1, 0, 1, 1}});
    DefiningSet d2 = defining_set_from_matrix(g2);
    CHECK(d2.big->order() == 16);
    std::vector<uint64_t> powers2;
    for (const auto& e : d2.elements) powers2.push_back(d2.big->dlog(e));
    CHECK(powers2 == std::vector<uint64_t>{0, 1, 2, 3, 8, 7, 11});
    CHECK(code_equal(trace_code(d2), LinearCode(g2)));

    // Zero matrix: all-zero defining set, zero code round trip.
    Matrix zeros(f2, 2, 5);
    DefiningSet dz = defining_set_from_matrix(zeros);
    for (const auto& e : dz.elements) CHECK(e.is_zero());
    CHECK(trace_code(dz).dimension() == 0);

    // m = max{k, ceil(log_q n)}: a single-row length-16 matrix needs m = 4.
    Matrix wide(f2, 1, 16);
    wide.set(0, 3, f2->one());
    CHECK(defining_set_from_matrix(wide).big->degree() == 4);

    // Rows beyond the rank are used as given.
    Matrix redundant = matrix_from_bits(f2, {{1, 0, 1}, {1, 0, 1}, {0, 1, 1}});
    DefiningSet dr = defining_set_from_matrix(redundant);
    CHECK(dr.big->degree() == 3);
    CHECK(code_equal(trace_code(dr), LinearCode(redundant)));
}

TEST_CASE("matrix round trip over GF(2), GF(3), GF(4)") {
    Rng rng(61);
    std::uniform_int_distribution<size_t> kdist(1, 4), ndist(1, 16);
    for (auto [p, s] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {2, 2}}) {
        FieldPtr f = Field::make(p, s);
        for (int i = 0; i < 15; ++i) {
            Matrix g = random_matrix(f, kdist(rng), ndist(rng), rng);
            DefiningSet d = defining_set_from_matrix(g);
            CHECK(code_equal(trace_code(d), LinearCode(g)));
        }
    }
}

TEST_CASE("two presentations of one code give the same trace code") {
    Rng rng(67);
    FieldPtr f2 = Field::make(2, 1);
    for (int i = 0; i < 10; ++i) {
        Matrix g = random_matrix(f2, 3, 7, rng);
        Matrix g2 = g;
        for (size_t r = 1; r < g.rows(); ++r)
            for (size_t c = 0; c < g.cols(); ++c) g2.set(r, c, g.at(r, c) + g.at(0, c));
        REQUIRE(code_equal(LinearCode(g), LinearCode(g2)));
        CHECK(code_equal(trace_code(defining_set_from_matrix(g)),
                         trace_code(defining_set_from_matrix(g2))));
    }
}

TEST_CASE("cyclic defining set via a normal element") {
    FieldPtr f2 = Field::make(2, 1);
    CyclicSpec spec(f2, 7, Poly::from_ints(f2, {1, 1, 0, 1}));

    FieldPtr f128 = Field::make(2, 7);
    FieldElement beta = f128->generator();
    FieldElement alpha = beta.pow(70);
    REQUIRE(is_normal_element(alpha, f2));

    DefiningSet d = cyclic_defining_set(spec, alpha);
    CHECK(d.length() == 7);
    // The formula evaluates to alpha^(2^0) + alpha^(2^4) + alpha^(2^6) for
    // this generator polynomial (the j = 7 term wraps to f_0 alpha).
    CHECK(d.elements[0] == alpha + alpha.pow(16) + alpha.pow(64));
    CHECK(code_equal(trace_code(d), cyclic_code(spec)));

    // Supplying a non-normal element is rejected.
    CHECK_THROWS_AS(cyclic_defining_set(spec, f128->one()), NotNormalError);

    // Unit polynomial: defining set spans, trace code is the whole space.
    CyclicSpec unit(f2, 4, Poly::from_ints(f2, {1}));
    LinearCode full = trace_code(cyclic_defining_set(unit));
    CHECK(full.dimension() == 4);
}

TEST_CASE("orbit closure and the gcd contract") {
    Rng rng(71);
    for (auto [q, n] : {std::pair<int64_t, int>{2, 7}, {2, 8}, {3, 5}}) {
        FieldPtr f = Field::make(q, 1);
        std::uniform_int_distribution<uint64_t> cdist(0, static_cast<uint64_t>(q) - 1);
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<FieldElement> coeffs;
            for (int i = 0; i < n; ++i) coeffs.push_back(f->from_index(cdist(rng)));
            Poly fp(f, coeffs);
            if (fp.is_zero()) continue;
            CyclicSpec spec(f, n, fp);
            DefiningSet d = cyclic_defining_set(spec);
            // x -> x^q rotates the ordered orbit by one position.
            for (size_t i = 0; i < d.length(); ++i)
                CHECK(frobenius(d.elements[i], 1, 1) == d.elements[(i + 1) % d.length()]);
            // The code only depends on gcd(f, x^n - 1).
            LinearCode via_trace = trace_code(d);
            CHECK(code_equal(via_trace, cyclic_code(spec)));
            CyclicSpec gcd_spec(f, n, generator_polynomial(spec));
            CHECK(code_equal(via_trace, cyclic_code(gcd_spec)));
        }
    }
}

TEST_CASE("order of q modulo n") {
    CHECK(ord_mod(2, 7) == 3);
    CHECK(ord_mod(2, 15) == 4);
    CHECK(ord_mod(2, 9) == 6);
    CHECK(ord_mod(3, 13) == 3);
    CHECK(ord_mod(5, 1) == 1);
    CHECK_THROWS_AS(ord_mod(2, 8), GcdNotOneError);
}

TEST_CASE("check-polynomial factorization into cosets") {
    FieldPtr f2 = Field::make(2, 1);

    // h = x - 1: the reciprocal is itself, J = {0}.
    WolfmannSpec triv = wolfmann_spec_from_check(Poly::from_ints(f2, {1, 1}), 7);
    CHECK(triv.m == 3);
    CHECK(triv.coset_reps == std::vector<int64_t>{0});
    CHECK(mult_order(triv.beta) == 7);

    // h = (x^7 - 1)/(1 + x + x^3) = 1 + x + x^2 + x^4. Its reciprocal is
    // 1 + x^2 + x^3 + x^4 = (x + 1)(x^3 + x + 1), so J = {0, 1}: the factor
    // trial against each coset's minimal polynomial picks cosets {0} and
    // {1,2,4}.
    Poly h = Poly::from_ints(f2, {1, 1, 1, 0, 1});
    WolfmannSpec spec = wolfmann_spec_from_check(h, 7);
    CHECK(spec.coset_reps == std::vector<int64_t>{0, 1});
    Poly prod = Poly::from_ints(f2, {1});
    for (int64_t j : spec.coset_reps) prod = prod * min_poly(spec.beta.pow(j), f2);
    CHECK(prod == reciprocal(h));

    CHECK_THROWS_AS(wolfmann_spec_from_check(h, 8), GcdNotOneError);
    CHECK_THROWS_AS(wolfmann_spec_from_check(Poly::from_ints(f2, {1, 1, 1}), 7),
                    NotDivisorError);
}

TEST_CASE("codeword family equals the cyclic code") {
    FieldPtr f2 = Field::make(2, 1);
    Poly xn1 = x_pow_minus_one(f2, 7);

    // Empty J (h = 1): the zero code.
    WolfmannSpec empty = wolfmann_spec_from_check(Poly::from_ints(f2, {1}), 7);
    CHECK(empty.coset_reps.empty());
    CHECK(wolfmann_code(empty).dimension() == 0);

    // J = {1}: the dimension-3 irreducible cyclic code.
    FieldPtr f8 = Field::make(2, 3);
    Poly h_irr = reciprocal(min_poly(f8->generator(), f2));
    WolfmannSpec irr = wolfmann_spec_from_check(h_irr, 7);
    CHECK(irr.coset_reps == std::vector<int64_t>{1});
    Poly g_irr = poly_divmod(xn1, h_irr).first;
    CHECK(code_equal(wolfmann_code(irr), cyclic_code(CyclicSpec(f2, 7, g_irr))));

    // J = {0, 1}: the [7,4] cyclic code generated by 1 + x + x^3.
    Poly h = Poly::from_ints(f2, {1, 1, 1, 0, 1});
    WolfmannSpec spec = wolfmann_spec_from_check(h, 7);
    CHECK(code_equal(wolfmann_code(spec),
                     cyclic_code(CyclicSpec(f2, 7, Poly::from_ints(f2, {1, 1, 0, 1})))));

    // Enumeration cap: n = 31 with the full check polynomial needs 2^35 tuples.
    WolfmannSpec big = wolfmann_spec_from_check(x_pow_minus_one(f2, 31), 31);
    CHECK_THROWS_AS(wolfmann_code(big), TooLargeError);
}

TEST_SUITE_END();
