#include "tracecode/selfcheck.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "tracecode/bases.hpp"
#include "tracecode/codes.hpp"
#include "tracecode/representations.hpp"
#include "tracecode/trace_construction.hpp"

// Desk-scale property suites behind the `verify` subcommand. Sizes are tuned
// so the whole battery runs in a few seconds; the same properties are pinned
// harder in the test suite.

namespace tracecode {

namespace {

using Rng = std::mt19937_64;

FieldElement random_element(const FieldPtr& f, Rng& rng) {
    std::uniform_int_distribution<uint64_t> dist(0, f->order() - 1);
    return f->from_index(dist(rng));
}

Matrix random_matrix(const FieldPtr& f, size_t rows, size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m.set(r, c, random_element(f, rng));
    return m;
}

struct Check {
    SuiteResult* result;
    void operator()(bool ok) {
        ++result->checks;
        if (!ok) ++result->failures;
    }
};

SuiteResult field_axioms(Rng& rng) {
    SuiteResult res{"field-axioms", 0, 0};
    Check check{&res};
    for (auto [p, d] : {std::pair<int64_t, int>{2, 3}, {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
        FieldPtr f = Field::make(p, d);
        for (int i = 0; i < 60; ++i) {
            FieldElement a = random_element(f, rng);
            FieldElement b = random_element(f, rng);
            FieldElement c = random_element(f, rng);
            check((a + b) + c == a + (b + c));
            check((a * b) * c == a * (b * c));
            check(a * b == b * a);
            check(a * (b + c) == a * b + a * c);
            check(a + (-a) == f->zero());
        }
        for (uint64_t k = 1; k < f->order(); ++k) {
            FieldElement a = f->from_index(k);
            check((a * a.inverse()).is_one());
        }
    }
    return res;
}

SuiteResult frobenius_homomorphism(Rng&) {
    SuiteResult res{"frobenius-homomorphism", 0, 0};
    Check check{&res};
    for (auto [p, d, s] : {std::tuple<int64_t, int, int>{2, 6, 1}, {2, 6, 2}, {3, 4, 1}}) {
        FieldPtr f = Field::make(p, d);
        for (uint64_t i = 0; i < f->order(); ++i) {
            FieldElement a = f->from_index(i);
            for (uint64_t j = i; j < f->order(); ++j) {
                FieldElement b = f->from_index(j);
                check(frobenius(a + b, s, 1) == frobenius(a, s, 1) + frobenius(b, s, 1));
                check(frobenius(a * b, s, 1) == frobenius(a, s, 1) * frobenius(b, s, 1));
            }
        }
    }
    return res;
}

SuiteResult trace_properties(Rng& rng) {
    SuiteResult res{"trace-linearity-and-fibers", 0, 0};
    Check check{&res};
    for (auto [p, d, s] : {std::tuple<int64_t, int, int>{2, 6, 2}, {2, 6, 3}, {3, 4, 2}, {2, 8, 1}}) {
        FieldPtr big = Field::make(p, d);
        FieldPtr ground = Field::make(p, s);
        const int m = d / s;
        for (int i = 0; i < 50; ++i) {
            FieldElement a = random_element(big, rng);
            FieldElement b = random_element(big, rng);
            FieldElement lam = embed(random_element(ground, rng), big);
            check(rel_trace(lam * a + b, s) == lam * rel_trace(a, s) + rel_trace(b, s));
            FieldElement t = rel_trace(a, s);
            check(frobenius(t, s, 1) == t);  // lands in the subfield
            project(t, ground);              // must not throw
            check(true);
        }
        // Each ground value is hit by exactly p^(s(m-1)) elements.
        std::vector<uint64_t> fiber(ground->order(), 0);
        for (uint64_t k = 0; k < big->order(); ++k)
            ++fiber[project(rel_trace(big->from_index(k), s), ground).index()];
        uint64_t expected = 1;
        for (int i = 0; i < s * (m - 1); ++i) expected *= static_cast<uint64_t>(p);
        for (uint64_t v : fiber) check(v == expected);
    }
    return res;
}

SuiteResult dual_bases(Rng& rng) {
    SuiteResult res{"dual-basis-pairing", 0, 0};
    Check check{&res};
    for (auto [p, s, m] : {std::tuple<int64_t, int, int>{2, 1, 4}, {3, 1, 3}, {2, 2, 3}}) {
        FieldPtr big = Field::make(p, s * m);
        FieldPtr ground = Field::make(p, s);
        std::vector<FieldBasis> bases{FieldBasis::polynomial(big, ground)};
        while (bases.size() < 3) {
            std::vector<FieldElement> elems;
            for (int i = 0; i < m; ++i) elems.push_back(random_element(big, rng));
            try {
                bases.emplace_back(big, ground, elems);
            } catch (const SingularBasisError&) {
            }
        }
        for (const auto& basis : bases) {
            FieldBasis dual = dual_basis(basis);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    FieldElement t = rel_trace(basis.elements()[static_cast<size_t>(i)] *
                                                   dual.elements()[static_cast<size_t>(j)],
                                               s);
                    check(i == j ? t.is_one() : t.is_zero());
                }
            }
            check(dual_basis(dual) == basis);
            // a = sum Tr(a b_j) a_j
            FieldElement a = random_element(big, rng);
            FieldElement acc = big->zero();
            for (int j = 0; j < m; ++j) {
                FieldElement c = rel_trace(a * dual.elements()[static_cast<size_t>(j)], s);
                acc = acc + c * basis.elements()[static_cast<size_t>(j)];
            }
            check(acc == a);
        }
    }
    return res;
}

SuiteResult normal_elements(Rng&) {
    SuiteResult res{"normal-element-search", 0, 0};
    Check check{&res};
    for (auto [p, s, m] : {std::tuple<int64_t, int, int>{2, 1, 2}, {2, 1, 7}, {3, 1, 4}, {2, 2, 3}}) {
        FieldPtr big = Field::make(p, s * m);
        FieldPtr ground = Field::make(p, s);
        FieldElement alpha = find_normal_element(big, ground);
        check(is_normal_element(alpha, ground));
        check(!is_normal_element(big->one(), ground) || m == 1);
    }
    return res;
}

SuiteResult canonical_forms(Rng& rng) {
    SuiteResult res{"rref-canonicalization", 0, 0};
    Check check{&res};
    std::uniform_int_distribution<size_t> kdist(1, 4), ndist(1, 10);
    for (int64_t q : {int64_t(2), int64_t(3)}) {
        FieldPtr f = Field::make(q, 1);
        for (int i = 0; i < 25; ++i) {
            Matrix m = random_matrix(f, kdist(rng), ndist(rng), rng);
            Matrix r = rref(m);
            check(rref(r) == r);
            for (size_t row = 0; row < m.rows(); ++row) check(in_row_space(r, m.row(row)));
            // Row scramble: prepend a random combination of existing rows.
            std::vector<std::vector<FieldElement>> rows;
            std::vector<FieldElement> mix(m.cols(), f->zero());
            for (size_t row = 0; row < m.rows(); ++row) {
                FieldElement coef = random_element(f, rng);
                for (size_t c = 0; c < m.cols(); ++c)
                    mix[c] = mix[c] + coef * m.at(row, c);
                rows.push_back(m.row(row));
            }
            rows.insert(rows.begin(), mix);
            Matrix scrambled = Matrix::from_rows(f, rows, m.cols());
            check(code_equal(LinearCode(m), LinearCode(scrambled)));
        }
    }
    return res;
}

SuiteResult code_counting(Rng& rng) {
    SuiteResult res{"weight-distribution-rules", 0, 0};
    Check check{&res};
    std::uniform_int_distribution<size_t> kdist(1, 4), ndist(1, 10);
    for (int64_t q : {int64_t(2), int64_t(3)}) {
        FieldPtr f = Field::make(q, 1);
        for (int i = 0; i < 15; ++i) {
            LinearCode code(random_matrix(f, kdist(rng), ndist(rng), rng));
            WeightDistribution w = weight_distribution(code);
            check(w.counts[0] == 1);
            uint64_t qk = 1;
            for (size_t j = 0; j < code.dimension(); ++j) qk *= static_cast<uint64_t>(q);
            check(w.total() == qk);
        }
    }
    // Cyclic codes are shift-invariant; cosets partition Z_n.
    FieldPtr f2 = Field::make(2, 1);
    for (int n : {4, 6, 7, 9}) {
        std::uniform_int_distribution<uint64_t> cdist(0, 1);
        std::vector<FieldElement> coeffs;
        for (int i = 0; i < n; ++i) coeffs.push_back(f2->from_index(cdist(rng)));
        Poly f(f2, coeffs);
        if (f.is_zero()) f = Poly::from_ints(f2, {1});
        LinearCode code = cyclic_code(CyclicSpec(f2, n, f));
        const Matrix& gen_m = code.generator_matrix();
        Matrix canon = rref(gen_m);
        for (size_t r = 0; r < gen_m.rows(); ++r) {
            std::vector<FieldElement> row = gen_m.row(r);
            std::rotate(row.rbegin(), row.rbegin() + 1, row.rend());
            check(in_row_space(canon, row));
        }
    }
    for (int64_t q : {int64_t(2), int64_t(3), int64_t(4)}) {
        for (int64_t n = 1; n <= 30; ++n) {
            if (std::gcd(n, q) != 1) continue;
            auto cosets = cyclotomic_cosets(n, q);
            size_t total = 0;
            for (const auto& c : cosets) total += c.size();
            check(total == static_cast<size_t>(n));
            int64_t ord = ord_mod(q, n);
            for (const auto& c : cosets) check(ord % static_cast<int64_t>(c.size()) == 0);
        }
    }
    return res;
}

SuiteResult character_sums(Rng& rng) {
    SuiteResult res{"character-sum-identities", 0, 0};
    Check check{&res};
    for (auto [p, s, m] : {std::tuple<int64_t, int, int>{2, 1, 3}, {2, 2, 2}, {3, 1, 2}, {5, 1, 2}}) {
        FieldPtr big = Field::make(p, s * m);
        FieldPtr ground = Field::make(p, s);
        std::uniform_int_distribution<size_t> ndist(1, 10);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<FieldElement> elems;
            size_t n = ndist(rng);
            for (size_t i = 0; i < n; ++i) elems.push_back(random_element(big, rng));
            DefiningSet d(big, ground, elems);
            const int64_t q = static_cast<int64_t>(ground->order());
            for (uint64_t k = 0; k < big->order(); ++k) {
                FieldElement x = big->from_index(k);
                std::vector<FieldElement> word = codeword(x, d);
                int64_t wt = 0;
                for (const auto& e : word) wt += !e.is_zero();
                check(weight_via_character_sum(x, d) == wt);
                // q N_x(0) = n + sum_{y != 0} chi(y x D)
                std::vector<FieldElement> multiset;
                for (uint64_t yi = 1; yi < ground->order(); ++yi) {
                    FieldElement y = embed(ground->from_index(yi), big);
                    for (const auto& di : d.elements) multiset.push_back(y * x * di);
                }
                int64_t sum = 0;
                if (!multiset.empty()) {
                    auto v = character_sum(multiset).integer_value();
                    check(v.has_value());
                    sum = v.value_or(0);
                }
                check(q * static_cast<int64_t>(count_zero_traces(x, d)) ==
                      static_cast<int64_t>(n) + sum);
            }
        }
    }
    return res;
}

SuiteResult matrix_roundtrip(Rng& rng) {
    SuiteResult res{"matrix-defining-set-roundtrip", 0, 0};
    Check check{&res};
    std::uniform_int_distribution<size_t> kdist(1, 3), ndist(1, 10);
    for (auto [p, s] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {2, 2}}) {
        FieldPtr f = Field::make(p, s);
        for (int i = 0; i < 12; ++i) {
            Matrix g = random_matrix(f, kdist(rng), ndist(rng), rng);
            DefiningSet d = defining_set_from_matrix(g);
            check(code_equal(trace_code(d), LinearCode(g)));
            check(trace_code(d).dimension() <= d.trace_degree());
        }
    }
    return res;
}

SuiteResult cyclic_via_normal(Rng& rng) {
    SuiteResult res{"cyclic-code-normal-representation", 0, 0};
    Check check{&res};
    for (auto [q, n] : {std::pair<int64_t, int>{2, 7}, {2, 8}, {3, 5}}) {
        FieldPtr f = Field::make(q, 1);
        std::uniform_int_distribution<uint64_t> cdist(0, static_cast<uint64_t>(q) - 1);
        for (int rep = 0; rep < 6; ++rep) {
            std::vector<FieldElement> coeffs;
            for (int i = 0; i < n; ++i) coeffs.push_back(f->from_index(cdist(rng)));
            Poly fp(f, coeffs);
            if (fp.is_zero()) fp = Poly::from_ints(f, {1, 1});
            CyclicSpec spec(f, n, fp);
            DefiningSet d = cyclic_defining_set(spec);
            check(code_equal(trace_code(d), cyclic_code(spec)));
            // Frobenius closure: x -> x^q rotates the orbit by one.
            for (size_t i = 0; i < d.length(); ++i)
                check(frobenius(d.elements[i], 1, 1) == d.elements[(i + 1) % d.length()]);
        }
    }
    return res;
}

SuiteResult codeword_family(Rng&) {
    SuiteResult res{"check-polynomial-codeword-family", 0, 0};
    Check check{&res};
    FieldPtr f = Field::make(2, 1);
    const int n = 7;
    Poly xn1 = x_pow_minus_one(f, n);
    // All 8 monic divisors of x^7 - 1 over GF(2).
    std::vector<Poly> factors;
    FieldPtr big = Field::make(2, 3);
    FieldElement beta = big->generator();
    for (const auto& coset : cyclotomic_cosets(n, 2))
        factors.push_back(min_poly(beta.pow(coset.front()), f));
    for (size_t mask = 0; mask < (size_t(1) << factors.size()); ++mask) {
        Poly h = Poly::from_ints(f, {1});
        for (size_t i = 0; i < factors.size(); ++i)
            if (mask & (size_t(1) << i)) h = h * factors[i];
        WolfmannSpec spec = wolfmann_spec_from_check(h, n);
        Poly g = poly_divmod(xn1, h).first;
        check(code_equal(wolfmann_code(spec), cyclic_code(CyclicSpec(f, n, g))));
    }
    return res;
}

SuiteResult representation_freedom(Rng& rng) {
    SuiteResult res{"representation-nonuniqueness", 0, 0};
    Check check{&res};
    FieldPtr f = Field::make(2, 1);
    std::uniform_int_distribution<size_t> kdist(2, 3), ndist(2, 8);
    for (int i = 0; i < 10; ++i) {
        Matrix g = random_matrix(f, kdist(rng), ndist(rng), rng);
        // Same row space, different presentation: add row 0 to every other row.
        Matrix g2 = g;
        for (size_t r = 1; r < g.rows(); ++r)
            for (size_t c = 0; c < g.cols(); ++c)
                g2.set(r, c, g.at(r, c) + g.at(0, c));
        if (!code_equal(LinearCode(g), LinearCode(g2))) {
            check(false);
            continue;
        }
        DefiningSet d1 = defining_set_from_matrix(g);
        DefiningSet d2 = defining_set_from_matrix(g2);
        check(code_equal(trace_code(d1), trace_code(d2)));
    }
    return res;
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(uint64_t seed, const std::string& filter) {
    std::vector<SuiteResult> results;
    uint64_t salt = 0;
    auto run = [&](const char* name, auto&& suite) {
        ++salt;
        if (!filter.empty() && std::string(name).find(filter) == std::string::npos) return;
        Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * salt));
        results.push_back(suite(rng));
    };
    run("field-axioms", field_axioms);
    run("frobenius-homomorphism", frobenius_homomorphism);
    run("trace-linearity-and-fibers", trace_properties);
    run("dual-basis-pairing", dual_bases);
    run("normal-element-search", normal_elements);
    run("rref-canonicalization", canonical_forms);
    run("weight-distribution-rules", code_counting);
    run("character-sum-identities", character_sums);
    run("matrix-defining-set-roundtrip", matrix_roundtrip);
    run("cyclic-code-normal-representation", cyclic_via_normal);
    run("check-polynomial-codeword-family", codeword_family);
    run("representation-nonuniqueness", representation_freedom);
    return results;
}

}  // namespace tracecode
