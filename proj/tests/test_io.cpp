#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "tracecode/io.hpp"

using namespace tracecode;

TEST_SUITE_BEGIN("io");

TEST_CASE("field spec text") {
    FieldPtr f = Field::make(2, 3);
    CHECK(format_field_spec(*f) == "p=2,d=3,modulus=1,1,0,1");
    CHECK(parse_field_spec("p=2,d=3,modulus=1,1,0,1")->same_spec(*f));
    CHECK(parse_field_spec("p=2,d=3")->same_spec(*f));  // default modulus
    CHECK_THROWS_AS(parse_field_spec("d=3,modulus=1,1,0,1"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("p=two,d=3"), ParseError);

    CHECK(parse_field_flag("2,3")->same_spec(*f));
    CHECK(parse_field_flag("2,3,1,1,0,1")->same_spec(*f));
    CHECK_THROWS_AS(parse_field_flag("2"), ParseError);
    CHECK_THROWS_AS(parse_field_flag("2,3,1,1"), ParseError);
}

TEST_CASE("element tokens") {
    FieldPtr f = Field::make(2, 3);
    FieldElement a3 = f->gen().pow(3);
    CHECK(format_element_coeffs(a3) == "[1,1,0]");
    CHECK(format_element(a3) == "g^3");
    CHECK(format_element(f->zero()) == "0");
    CHECK(format_element(f->one()) == "1");
    CHECK(format_element(f->gen()) == "g");

    CHECK(parse_element("g^3", f) == a3);
    CHECK(parse_element("[1,1,0]", f) == a3);
    CHECK(parse_element(" g ", f) == f->gen());
    CHECK(parse_element("0", f).is_zero());
    CHECK(parse_element("5", f) == f->from_index(5));
    CHECK_THROWS_AS(parse_element("h^2", f), ParseError);
    CHECK_THROWS_AS(parse_element("[1,0", f), ParseError);
    CHECK_THROWS_AS(parse_element("9", f), ParseError);
    CHECK_THROWS_AS(parse_element("", f), ParseError);
}

TEST_CASE("polynomial text") {
    FieldPtr f2 = Field::make(2, 1);
    Poly g = Poly::from_ints(f2, {1, 1, 0, 1});
    CHECK(format_poly(g) == "1,1,0,1");
    CHECK(parse_poly("1,1,0,1", f2) == g);
    CHECK(format_poly(Poly(f2)) == "0");

    // Non-prime coefficients use bracketed element tokens.
    FieldPtr f4 = Field::make(2, 2);
    Poly h = Poly(f4, {f4->one(), f4->gen()});
    CHECK(format_poly(h) == "[1,0],[0,1]");
    CHECK(parse_poly("[1,0],[0,1]", f4) == h);
}

TEST_CASE("basis text") {
    FieldPtr f8 = Field::make(2, 3);
    FieldPtr f2 = Field::make(2, 1);
    FieldBasis b = FieldBasis::polynomial(f8, f2);
    CHECK(format_basis(b) == "1, g, g^2");
    CHECK(parse_basis("1, g, g^2", f8, f2) == b);
    CHECK(parse_basis("[1,0,0],[0,1,0],[0,0,1]", f8, f2) == b);
    CHECK_THROWS_AS(parse_basis("1, g, g^3", f8, f2), SingularBasisError);  // g^3 = 1 + g
}

TEST_CASE("matrix text") {
    FieldPtr f2 = Field::make(2, 1);
    std::istringstream in("# comment line\n1 0 1\n0 1 1\n");
    Matrix m = parse_matrix(in, f2);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(format_matrix(m) == "1 0 1\n0 1 1\n");

    std::istringstream ragged("1 0 1\n0 1\n");
    CHECK_THROWS_AS(parse_matrix(ragged, f2), ParseError);
    std::istringstream empty("\n# nothing\n");
    CHECK_THROWS_AS(parse_matrix(empty, f2), ParseError);
}

TEST_CASE("defining set files round trip") {
    FieldPtr f8 = Field::make(2, 3);
    FieldPtr f2 = Field::make(2, 1);
    FieldElement a = f8->gen();
    DefiningSet d(f8, f2, {f8->one(), a, a.pow(2), f8->one(), a.pow(3), a.pow(4), a.pow(2)});

    std::string text = format_defining_set(d);
    std::istringstream in(text);
    DefiningSet back = parse_defining_set(in);
    CHECK(back.big->same_spec(*f8));
    CHECK(back.ground->same_spec(*f2));
    CHECK(back.elements == d.elements);

    // With a non-prime ground field, the ground line is emitted and parsed.
    FieldPtr f16 = Field::make(2, 4);
    FieldPtr f4 = Field::make(2, 2);
    DefiningSet d4(f16, f4, {f16->gen(), f16->one()});
    std::string text4 = format_defining_set(d4);
    CHECK(text4.find("ground=") != std::string::npos);
    std::istringstream in4(text4);
    DefiningSet back4 = parse_defining_set(in4);
    CHECK(back4.ground->same_spec(*f4));
    CHECK(back4.elements == d4.elements);

    std::istringstream missing("p=2,d=3,modulus=1,1,0,1\n");
    CHECK_THROWS_AS(parse_defining_set(missing), ParseError);
}

TEST_CASE("weight enumerator and parameter strings") {
    FieldPtr f2 = Field::make(2, 1);
    LinearCode hamming = cyclic_code(CyclicSpec(f2, 7, Poly::from_ints(f2, {1, 1, 0, 1})));
    CHECK(format_weight_enumerator(weight_distribution(hamming)) == "1 + 7z^3 + 7z^4 + z^7");
    CHECK(format_code_params(hamming) == "[7,4,3]");

    LinearCode zero(Matrix(f2, 1, 4));
    CHECK(format_weight_enumerator(weight_distribution(zero)) == "1");
    CHECK(format_code_params(zero) == "[4,0]");

    WeightDistribution w;
    w.counts = {1, 1, 0, 2};
    CHECK(format_weight_enumerator(w) == "1 + z + 2z^3");
}

TEST_SUITE_END();
