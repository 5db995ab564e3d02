#include "doctest.h"
#include "test_util.hpp"
#include "tracecode/bases.hpp"

using namespace tracecode;
using tracecode::testutil::Rng;
using tracecode::testutil::random_element;

TEST_SUITE_BEGIN("bases");

TEST_CASE("coordinates against the polynomial basis") {
    FieldPtr f8 = Field::make(2, 3);
    FieldPtr f2 = Field::make(2, 1);
    FieldBasis b = FieldBasis::polynomial(f8, f2);

    auto c = coordinates(b.elements()[0], b);
    CHECK(c[0].is_one());
    CHECK(c[1].is_zero());
    CHECK(c[2].is_zero());

    // a^3 = 1 + a in this presentation.
    auto c3 = coordinates(f8->gen().pow(3), b);
    CHECK(c3[0].is_one());
    CHECK(c3[1].is_one());
    CHECK(c3[2].is_zero());

    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
        // Round trip: coordinates of sum c_j a_j give back (c_j).
        std::vector<FieldElement> cs;
        FieldElement a = f8->zero();
        for (size_t j = 0; j < b.size(); ++j) {
            cs.push_back(random_element(f2, rng));
            a = a + embed(cs.back(), f8) * b.elements()[j];
        }
        CHECK(coordinates(a, b) == cs);

        // Ground-linearity.
        FieldElement x = random_element(f8, rng);
        FieldElement y = random_element(f8, rng);
        auto cx = coordinates(x, b), cy = coordinates(y, b), cxy = coordinates(x + y, b);
        for (size_t j = 0; j < b.size(); ++j) CHECK(cxy[j] == cx[j] + cy[j]);
    }
}

TEST_CASE("dependent element sets are rejected") {
    FieldPtr f8 = Field::make(2, 3);
    FieldPtr f2 = Field::make(2, 1);
    FieldElement a = f8->gen();
    CHECK_THROWS_AS(FieldBasis(f8, f2, {a, a, a.pow(2)}), SingularBasisError);
    CHECK_THROWS_AS(FieldBasis(f8, f2, {a, a.pow(2)}), LengthMismatchError);
}

TEST_CASE("dual basis pairing") {
    // The normal basis {g, g^2} of GF(4) over GF(2) is self-dual.
    FieldPtr f4 = Field::make(2, 2);
    FieldPtr f2 = Field::make(2, 1);
    FieldElement gamma = f4->gen();
    FieldBasis normal(f4, f2, {gamma, gamma.pow(2)});
    CHECK(dual_basis(normal) == normal);

    // Polynomial basis of GF(8): all nine pairing equations hold.
    FieldPtr f8 = Field::make(2, 3);
    FieldBasis poly_basis = FieldBasis::polynomial(f8, f2);
    FieldBasis dual = dual_basis(poly_basis);
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
            FieldElement t = rel_trace(poly_basis.elements()[i] * dual.elements()[j], 1);
            CHECK((i == j ? t.is_one() : t.is_zero()));
        }
    }

    // Duality is an involution, and the dual-basis expansion reproduces
    // every element: a = sum Tr(a b_j) a_j.
    Rng rng(31);
    for (auto [p, s, m] : {std::tuple<int64_t, int, int>{2, 1, 4}, {3, 1, 3}, {2, 2, 2}}) {
        FieldPtr big = Field::make(p, s * m);
        FieldPtr ground = Field::make(p, s);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<FieldElement> elems;
            for (int i = 0; i < m; ++i) elems.push_back(random_element(big, rng));
            try {
                FieldBasis basis(big, ground, elems);
                FieldBasis d = dual_basis(basis);
                CHECK(dual_basis(d) == basis);
                FieldElement a = random_element(big, rng);
                FieldElement acc = big->zero();
                for (int j = 0; j < m; ++j)
                    acc = acc + rel_trace(a * d.elements()[static_cast<size_t>(j)], s) *
                                    basis.elements()[static_cast<size_t>(j)];
                CHECK(acc == a);
            } catch (const SingularBasisError&) {
                // dependent random pick; try the next one
            }
        }
    }
}

TEST_CASE("normal elements") {
    FieldPtr f4 = Field::make(2, 2);
    FieldPtr f2 = Field::make(2, 1);
    // Any element outside GF(2) is normal in GF(4); the scan returns g^1.
    CHECK(find_normal_element(f4, f2) == f4->generator());

    // 1 is never normal past degree 1 (its conjugates coincide), and in this
    // GF(8) presentation gen is not normal either: gen^4 = gen^2 + gen, so
    // the three conjugates are dependent.
    FieldPtr f8 = Field::make(2, 3);
    CHECK_FALSE(is_normal_element(f8->one(), f2));
    CHECK(f8->gen().pow(4) == f8->gen().pow(2) + f8->gen());
    CHECK_FALSE(is_normal_element(f8->gen(), f2));
    FieldElement found = find_normal_element(f8, f2);
    CHECK(is_normal_element(found, f2));

    // beta^70 is normal in GF(2^7).
    FieldPtr f128 = Field::make(2, 7);
    CHECK(is_normal_element(f128->generator().pow(70), f2));

    // Intermediate ground field.
    FieldPtr f16 = Field::make(2, 4);
    FieldElement nrm = find_normal_element(f16, f4);
    CHECK(is_normal_element(nrm, f4));
}

TEST_SUITE_END();
