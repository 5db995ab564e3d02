#include "tracecode/codes.hpp"

#include <numeric>

namespace tracecode {

namespace {

constexpr uint64_t kEnumerationCap = uint64_t(1) << 20;

Matrix strip_zero_rows(const Matrix& m) {
    std::vector<std::vector<FieldElement>> rows;
    for (size_t r = 0; r < m.rows(); ++r) {
        bool nonzero = false;
        for (size_t c = 0; c < m.cols() && !nonzero; ++c) nonzero = !m.at(r, c).is_zero();
        if (nonzero) rows.push_back(m.row(r));
    }
    return Matrix::from_rows(m.field(), rows, m.cols());
}

// q^k, saturating past the enumeration cap.
uint64_t pow_capped(uint64_t q, size_t k) {
    unsigned __int128 v = 1;
    for (size_t i = 0; i < k; ++i) {
        v *= q;
        if (v > (unsigned __int128)(kEnumerationCap) * 2) return kEnumerationCap * 2;
    }
    return static_cast<uint64_t>(v);
}

}  // namespace

LinearCode::LinearCode(const Matrix& generator) : canonical_(strip_zero_rows(rref(generator))) {
    if (generator.cols() == 0) throw Error("code length must be >= 1");
}

bool code_equal(const LinearCode& a, const LinearCode& b) {
    if (!a.field()->same_spec(*b.field()))
        throw SpecMismatchError("codes are defined over different fields");
    if (a.length() != b.length())
        throw LengthMismatchError("codes have different lengths");
    return a.generator_matrix() == b.generator_matrix();
}

uint64_t WeightDistribution::total() const {
    return std::accumulate(counts.begin(), counts.end(), uint64_t(0));
}

WeightDistribution weight_distribution(const LinearCode& code) {
    const FieldPtr& f = code.field();
    const uint64_t q = f->order();
    const size_t k = code.dimension();
    const size_t n = code.length();
    if (pow_capped(q, k) > kEnumerationCap)
        throw TooLargeError("codeword enumeration limited to q^k <= 2^20");

    WeightDistribution w;
    w.counts.assign(n + 1, 0);

    // Index-space rows; scaled copies precomputed per (row, scalar).
    std::vector<std::vector<uint32_t>> scaled(k * q, std::vector<uint32_t>(n, 0));
    for (size_t r = 0; r < k; ++r) {
        for (uint64_t c = 1; c < q; ++c) {
            for (size_t j = 0; j < n; ++j)
                scaled[r * q + c][j] =
                    static_cast<uint32_t>(f->mul_index(c, code.generator_matrix().at(r, j).index()));
        }
    }

    std::vector<std::vector<uint32_t>> level(k + 1, std::vector<uint32_t>(n, 0));
    auto recurse = [&](auto&& self, size_t depth) -> void {
        if (depth == k) {
            size_t wt = 0;
            for (size_t j = 0; j < n; ++j) wt += level[depth][j] != 0;
            ++w.counts[wt];
            return;
        }
        for (uint64_t c = 0; c < q; ++c) {
            if (c == 0) {
                level[depth + 1] = level[depth];
            } else {
                const auto& add_row = scaled[depth * q + c];
                for (size_t j = 0; j < n; ++j)
                    level[depth + 1][j] =
                        static_cast<uint32_t>(f->add_index(level[depth][j], add_row[j]));
            }
            self(self, depth + 1);
        }
    };
    recurse(recurse, 0);
    return w;
}

size_t min_distance(const LinearCode& code) {
    if (code.dimension() == 0) throw ZeroCodeError("the zero code has no minimum distance");
    WeightDistribution w = weight_distribution(code);
    for (size_t i = 1; i < w.counts.size(); ++i)
        if (w.counts[i] > 0) return i;
    throw ZeroCodeError("the zero code has no minimum distance");  // unreachable for k >= 1
}

CyclicSpec::CyclicSpec(FieldPtr field_in, int length_in, const Poly& f_in)
    : field(std::move(field_in)), length(length_in), f(field) {
    if (length < 1) throw Error("cyclic code length must be >= 1");
    if (f_in.is_zero()) throw Error("the generating polynomial must be nonzero");
    if (!f_in.field()->same_spec(*field))
        throw SpecMismatchError("polynomial is defined over a different field");
    f = poly_divmod(f_in, x_pow_minus_one(field, length)).second;
}

LinearCode cyclic_code(const CyclicSpec& spec) {
    const size_t n = static_cast<size_t>(spec.length);
    Matrix shifts(spec.field, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            shifts.set(i, (i + j) % n, spec.f.coeff(static_cast<int>(j)));
    return LinearCode(shifts);
}

Poly generator_polynomial(const CyclicSpec& spec) {
    return poly_gcd(spec.f, x_pow_minus_one(spec.field, spec.length));
}

bool generates_same_cyclic_code(const CyclicSpec& f_spec, const CyclicSpec& reference) {
    if (!f_spec.field->same_spec(*reference.field))
        throw SpecMismatchError("cyclic specs are defined over different fields");
    if (f_spec.length != reference.length)
        throw LengthMismatchError("cyclic specs have different lengths");
    return generator_polynomial(f_spec) == generator_polynomial(reference);
}

std::vector<std::vector<int64_t>> cyclotomic_cosets(int64_t n, int64_t q) {
    if (n < 1) throw Error("modulus must be >= 1");
    if (std::gcd(n, q) != 1) throw GcdNotOneError("cyclotomic cosets need gcd(n, q) = 1");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<std::vector<int64_t>> cosets;
    for (int64_t j = 0; j < n; ++j) {
        if (seen[static_cast<size_t>(j)]) continue;
        std::vector<int64_t> coset;
        int64_t v = j;
        do {
            coset.push_back(v);
            seen[static_cast<size_t>(v)] = true;
            v = (v * (q % n)) % n;
        } while (v != j);
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

Poly check_polynomial(const Poly& g, int n) {
    auto [quo, rem] = poly_divmod(x_pow_minus_one(g.field(), n), g);
    if (!rem.is_zero())
        throw NotDivisorError("polynomial does not divide x^" + std::to_string(n) + " - 1");
    return quo;
}

}  // namespace tracecode
