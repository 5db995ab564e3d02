#include "tracecode/representations.hpp"

#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

namespace tracecode {

namespace {

constexpr uint64_t kEnumerationCap = uint64_t(1) << 20;

// Smallest e with q^e >= n.
int ceil_log(uint64_t q, uint64_t n) {
    int e = 0;
    uint64_t pw = 1;
    while (pw < n) {
        pw *= q;
        ++e;
    }
    return e;
}

}  // namespace

DefiningSet defining_set_from_matrix(const Matrix& g) {
    if (g.rows() == 0 || g.cols() == 0) throw Error("matrix must have at least one row and column");
    const FieldPtr& ground = g.field();
    const int s = ground->degree();
    const size_t k = g.rows();
    const size_t n = g.cols();
    const int m = std::max(static_cast<int>(k), ceil_log(ground->order(), n));

    FieldPtr big = Field::make(ground->characteristic(), s * m);
    std::vector<FieldElement> basis_pows;  // gen^0 .. gen^(k-1)
    basis_pows.reserve(k);
    FieldElement pw = big->one();
    FieldElement gen = big->gen();
    for (size_t j = 0; j < k; ++j) {
        basis_pows.push_back(pw);
        pw = pw * gen;
    }

    std::vector<FieldElement> elems;
    elems.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        FieldElement acc = big->zero();
        for (size_t j = 0; j < k; ++j) acc = acc + embed(g.at(j, i), big) * basis_pows[j];
        elems.push_back(acc);
    }
    return DefiningSet(big, ground, std::move(elems));
}

DefiningSet cyclic_defining_set(const CyclicSpec& spec) {
    FieldPtr big = Field::make(spec.field->characteristic(), spec.field->degree() * spec.length);
    return cyclic_defining_set(spec, find_normal_element(big, spec.field));
}

DefiningSet cyclic_defining_set(const CyclicSpec& spec, const FieldElement& alpha) {
    const int s = spec.field->degree();
    const int n = spec.length;
    FieldPtr big = Field::make(spec.field->characteristic(), s * n);
    if (!alpha.field()->same_spec(*big))
        throw SpecMismatchError("normal element must live in GF(q^n)");
    if (!is_normal_element(alpha, spec.field))
        throw NotNormalError("supplied element fails the normal-element rank test");

    // d = sum_{j=1..n} f_{n-j} alpha^(q^j); the j = n term wraps to f_0 alpha.
    FieldElement d = big->zero();
    for (int j = 1; j <= n; ++j) {
        FieldElement coeff = spec.f.coeff(n - j);
        if (coeff.is_zero()) continue;
        d = d + embed(coeff, big) * frobenius(alpha, s, j);
    }

    std::vector<FieldElement> orbit;
    orbit.reserve(static_cast<size_t>(n));
    FieldElement cur = d;
    for (int i = 0; i < n; ++i) {
        orbit.push_back(cur);
        cur = frobenius(cur, s, 1);
    }
    return DefiningSet(big, spec.field, std::move(orbit));
}

int64_t ord_mod(int64_t q, int64_t n) {
    if (n < 1) throw Error("modulus must be >= 1");
    if (std::gcd(q, n) != 1) throw GcdNotOneError("order of q mod n needs gcd(q, n) = 1");
    if (n == 1) return 1;
    int64_t acc = q % n;
    int64_t t = 1;
    while (acc != 1) {
        acc = (acc * (q % n)) % n;
        ++t;
    }
    return t;
}

WolfmannSpec wolfmann_spec_from_check(const Poly& h, int n) {
    if (h.is_zero()) throw Error("check polynomial must be nonzero");
    const FieldPtr& ground = h.field();
    const int64_t q = static_cast<int64_t>(ground->order());
    if (std::gcd(static_cast<int64_t>(n), q) != 1)
        throw GcdNotOneError("this representation needs gcd(n, q) = 1");
    Poly h_monic = h.to_monic();
    if (!poly_divmod(x_pow_minus_one(ground, n), h_monic).second.is_zero())
        throw NotDivisorError("h does not divide x^" + std::to_string(n) + " - 1");

    const int m = static_cast<int>(ord_mod(q, n));
    FieldPtr big = Field::make(ground->characteristic(), ground->degree() * m);
    FieldElement gamma = big->generator();
    FieldElement beta = gamma.pow(static_cast<int64_t>((big->order() - 1) / static_cast<uint64_t>(n)));
    if (mult_order(beta) != static_cast<uint64_t>(n))
        throw Error("beta does not have multiplicative order n");  // unreachable

    Poly h_star = reciprocal(h_monic);
    std::vector<int64_t> reps;
    for (const auto& coset : cyclotomic_cosets(n, q)) {
        Poly mp = min_poly(beta.pow(coset.front()), ground);
        auto [quo, rem] = poly_divmod(h_star, mp);
        if (rem.is_zero() && quo.degree() + mp.degree() == h_star.degree()) {
            reps.push_back(coset.front());
            h_star = quo;
        }
    }
    if (!h_star.is_one())
        throw FactorMismatchError("reciprocal check polynomial does not split into whole cosets");

    return WolfmannSpec{ground, n, m, big, beta, std::move(reps)};
}

LinearCode wolfmann_code(const WolfmannSpec& spec) {
    const FieldPtr& ground = spec.ground;
    const FieldPtr& big = spec.big;
    const uint64_t r = big->order();
    const size_t t = spec.coset_reps.size();
    const size_t n = static_cast<size_t>(spec.length);
    const uint64_t q = ground->order();

    {
        unsigned __int128 tuples = 1;
        for (size_t i = 0; i < t; ++i) {
            tuples *= r;
            if (tuples > kEnumerationCap)
                throw TooLargeError("coefficient enumeration limited to q^(m|J|) <= 2^20");
        }
        if (q > 65535) throw TooLargeError("ground fields larger than 2^16 are not tabulated");
    }

    if (t == 0) return LinearCode(Matrix(ground, 0, n));

    const int s = ground->degree();
    const size_t d = static_cast<size_t>(big->degree());

    // tab[jj][i][a] = ground index of Tr(a * beta^(i * J[jj])), built through
    // GF(p)-linearity of a -> Tr(a c).
    std::vector<std::vector<std::vector<uint16_t>>> tab(
        t, std::vector<std::vector<uint16_t>>(n));
    const int64_t p = big->characteristic();
    for (size_t jj = 0; jj < t; ++jj) {
        for (size_t i = 0; i < n; ++i) {
            FieldElement c = spec.beta.pow(static_cast<int64_t>(i) * spec.coset_reps[jj]);
            std::vector<uint64_t> basis_tr(d);
            FieldElement pw = big->one();
            FieldElement g = big->gen();
            for (size_t bi = 0; bi < d; ++bi) {
                basis_tr[bi] = project(rel_trace(pw * c, s), ground).index();
                pw = pw * g;
            }
            auto& slot = tab[jj][i];
            slot.resize(r);
            for (uint64_t a = 0; a < r; ++a) {
                uint64_t rest = a;
                uint64_t acc = 0;
                for (size_t bi = 0; bi < d && rest > 0; ++bi) {
                    uint64_t digit = rest % static_cast<uint64_t>(p);
                    rest /= static_cast<uint64_t>(p);
                    if (digit)
                        acc = ground->add_index(acc, ground->mul_index(digit, basis_tr[bi]));
                }
                slot[a] = static_cast<uint16_t>(acc);
            }
        }
    }

    // Enumerate coefficient tuples; maintain an echelon basis of the emitted
    // codewords plus the distinct-codeword count so the result is checked to
    // really be the linear span.
    const int bits = std::bit_width(q - 1);
    const bool packable = bits * n <= 64;
    std::unordered_set<uint64_t> packed_seen;
    if (packable) packed_seen.reserve(size_t(1) << 21);
    std::set<std::vector<uint32_t>> generic_seen;

    std::vector<std::vector<uint32_t>> basis;  // echelon rows (ground indices)
    std::vector<size_t> pivots;

    std::vector<uint64_t> digits(t, 0);
    std::vector<uint32_t> cw(n);
    bool done = false;
    while (!done) {
        for (size_t i = 0; i < n; ++i) {
            uint64_t acc = tab[0][i][digits[0]];
            for (size_t jj = 1; jj < t; ++jj) acc = ground->add_index(acc, tab[jj][i][digits[jj]]);
            cw[i] = static_cast<uint32_t>(acc);
        }

        if (packable) {
            uint64_t key = 0;
            for (size_t i = 0; i < n; ++i) key = (key << bits) | cw[i];
            packed_seen.insert(key);
        } else {
            generic_seen.insert(cw);
        }

        if (basis.size() < n) {  // a full-length basis already spans everything
            std::vector<uint32_t> red = cw;
            for (size_t b = 0; b < basis.size(); ++b) {
                if (red[pivots[b]] == 0) continue;
                uint64_t factor = red[pivots[b]];
                for (size_t i = 0; i < n; ++i) {
                    uint64_t sub = ground->mul_index(factor, basis[b][i]);
                    red[i] =
                        static_cast<uint32_t>(ground->add_index(red[i], ground->neg_index(sub)));
                }
            }
            size_t lead = n;
            for (size_t i = 0; i < n; ++i) {
                if (red[i] != 0) {
                    lead = i;
                    break;
                }
            }
            if (lead != n) {
                uint64_t inv = ground->inv_index(red[lead]);
                for (size_t i = 0; i < n; ++i)
                    red[i] = static_cast<uint32_t>(ground->mul_index(inv, red[i]));
                basis.push_back(std::move(red));
                pivots.push_back(lead);
            }
        }

        done = true;
        for (size_t jj = 0; jj < t; ++jj) {
            if (++digits[jj] < r) {
                done = false;
                break;
            }
            digits[jj] = 0;
        }
    }

    uint64_t expected = 1;
    for (size_t i = 0; i < basis.size(); ++i) expected *= q;
    uint64_t distinct = packable ? packed_seen.size() : generic_seen.size();
    if (distinct != expected)
        throw Error("emitted codeword family is not closed under addition");  // unreachable

    Matrix gen_matrix(ground, basis.size(), n);
    for (size_t b = 0; b < basis.size(); ++b)
        for (size_t i = 0; i < n; ++i) gen_matrix.set(b, i, ground->from_index(basis[b][i]));
    return LinearCode(gen_matrix);
}

}  // namespace tracecode
