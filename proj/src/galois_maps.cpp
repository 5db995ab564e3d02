#include <algorithm>

#include "tracecode/field.hpp"

// Frobenius maps, relative traces and subfield embeddings. Everything here
// exploits GF(p)-linearity: the image of an element is the coefficient
// combination of precomputed images of the polynomial basis {gen^i}.

namespace tracecode {

namespace {

int64_t mod_reduce(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

int64_t mod_inverse_small(int64_t a, int64_t p) {
    int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod_reduce(t, p);
}

void check_subfield_degree(const Field& f, int s) {
    if (s < 1 || f.degree() % s != 0)
        throw DegreeNotDivisibleError("subfield degree " + std::to_string(s) +
                                      " does not divide " + std::to_string(f.degree()));
}

// c0*images[0] + c1*images[1] + ... with GF(p) scalars, done on raw
// coefficient vectors.
FieldElement linear_combination(const FieldPtr& f, const std::vector<int64_t>& scalars,
                                const std::vector<FieldElement>& images) {
    const int64_t p = f->characteristic();
    std::vector<int64_t> acc(static_cast<size_t>(f->degree()), 0);
    for (size_t i = 0; i < scalars.size(); ++i) {
        if (scalars[i] == 0) continue;
        const auto& img = images[i].coeffs();
        for (size_t k = 0; k < acc.size(); ++k) acc[k] = mod_reduce(acc[k] + scalars[i] * img[k], p);
    }
    return f->element(std::move(acc));
}

// Gauss-Jordan inverse of an n x n matrix mod p; empty vector when singular.
std::vector<int64_t> invert_mod_p(std::vector<int64_t> m, size_t n, int64_t p) {
    std::vector<int64_t> inv(n * n, 0);
    for (size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot * n + col] == 0) ++pivot;
        if (pivot == n) return {};
        if (pivot != col) {
            for (size_t j = 0; j < n; ++j) {
                std::swap(m[pivot * n + j], m[col * n + j]);
                std::swap(inv[pivot * n + j], inv[col * n + j]);
            }
        }
        int64_t scale = mod_inverse_small(m[col * n + col], p);
        for (size_t j = 0; j < n; ++j) {
            m[col * n + j] = mod_reduce(m[col * n + j] * scale, p);
            inv[col * n + j] = mod_reduce(inv[col * n + j] * scale, p);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r * n + col] == 0) continue;
            int64_t factor = m[r * n + col];
            for (size_t j = 0; j < n; ++j) {
                m[r * n + j] = mod_reduce(m[r * n + j] - factor * m[col * n + j], p);
                inv[r * n + j] = mod_reduce(inv[r * n + j] - factor * inv[col * n + j], p);
            }
        }
    }
    return inv;
}

}  // namespace

const std::vector<FieldElement>& Field::frobenius_basis_images(int s) const {
    check_subfield_degree(*this, s);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = frob_images_.find(s);
    if (it == frob_images_.end()) {
        uint64_t q = 1;
        for (int i = 0; i < s; ++i) q *= static_cast<uint64_t>(p_);
        std::vector<FieldElement> images;
        images.reserve(static_cast<size_t>(d_));
        FieldElement pw = one();
        FieldElement g = gen();
        for (int i = 0; i < d_; ++i) {
            images.push_back(pw.pow(static_cast<int64_t>(q)));
            pw = pw * g;
        }
        it = frob_images_.emplace(s, std::move(images)).first;
    }
    return it->second;
}

const std::vector<FieldElement>& Field::trace_basis_images(int s) const {
    check_subfield_degree(*this, s);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = trace_images_.find(s);
    if (it == trace_images_.end()) {
        const int m = d_ / s;
        const auto& frob = frobenius_basis_images(s);
        std::vector<FieldElement> traces;
        traces.reserve(static_cast<size_t>(d_));
        FieldElement pw = one();
        FieldElement g = gen();
        for (int i = 0; i < d_; ++i) {
            FieldElement conj = pw;
            FieldElement acc = pw;
            for (int j = 1; j < m; ++j) {
                conj = linear_combination(shared_from_this(), conj.coeffs(), frob);
                acc = acc + conj;
            }
            traces.push_back(acc);
            pw = pw * g;
        }
        it = trace_images_.emplace(s, std::move(traces)).first;
    }
    return it->second;
}

const Field::EmbedData& Field::embedding_from(const FieldPtr& ground) const {
    if (ground->characteristic() != p_)
        throw SpecMismatchError("ground field has a different characteristic");
    check_subfield_degree(*this, ground->degree());
    std::lock_guard<std::recursive_mutex> lock(mu_);
    const std::string key = ground->spec_string();
    auto it = embeddings_.find(key);
    if (it != embeddings_.end()) return it->second;

    const int s = ground->degree();
    const int m = d_ / s;
    FieldPtr self = shared_from_this();

    // First root of the ground modulus in this field, ascending
    // coefficient-sequence order.
    const auto& gm = ground->modulus();
    std::optional<FieldElement> root;
    for (uint64_t k = 0; k < order_; ++k) {
        FieldElement x = from_index(k);
        FieldElement acc = zero();
        FieldElement pw = one();
        for (size_t i = 0; i < gm.size(); ++i) {
            if (gm[i] != 0) {
                std::vector<int64_t> scaled(pw.coeffs());
                for (auto& c : scaled) c = mod_reduce(c * gm[i], p_);
                acc = acc + element(std::move(scaled));
            }
            pw = pw * x;
        }
        if (acc.is_zero()) {
            root = x;
            break;
        }
    }
    if (!root) throw Error("ground modulus has no root in the big field");  // unreachable

    EmbedData data;
    data.ground = ground;
    data.root_pows.reserve(static_cast<size_t>(s));
    FieldElement rp = one();
    for (int t = 0; t < s; ++t) {
        data.root_pows.push_back(rp);
        rp = rp * *root;
    }

    // Column (j*s + t) holds the coefficients of gen^j * root^t; its inverse
    // turns element coefficients into ground coordinates.
    const size_t n = static_cast<size_t>(d_);
    std::vector<int64_t> basis_mat(n * n, 0);
    FieldElement gp = one();
    FieldElement g = gen();
    for (int j = 0; j < m; ++j) {
        for (int t = 0; t < s; ++t) {
            FieldElement b = gp * data.root_pows[static_cast<size_t>(t)];
            const auto& c = b.coeffs();
            size_t col = static_cast<size_t>(j * s + t);
            for (size_t r = 0; r < n; ++r) basis_mat[r * n + col] = c[r];
        }
        gp = gp * g;
    }
    data.coord_solver = invert_mod_p(std::move(basis_mat), n, p_);
    if (data.coord_solver.empty()) throw Error("embedding basis is singular");  // unreachable

    return embeddings_.emplace(key, std::move(data)).first->second;
}

FieldElement frobenius(const FieldElement& a, int base_degree, int64_t iterations) {
    const FieldPtr& f = a.field();
    check_subfield_degree(*f, base_degree);
    const int m = f->degree() / base_degree;
    int64_t e = iterations % m;
    if (e < 0) e += m;
    if (e == 0) return a;
    const auto& images = f->frobenius_basis_images(base_degree);
    FieldElement result = a;
    for (int64_t i = 0; i < e; ++i)
        result = linear_combination(f, result.coeffs(), images);
    return result;
}

FieldElement rel_trace(const FieldElement& a, int subfield_degree) {
    const FieldPtr& f = a.field();
    const auto& traces = f->trace_basis_images(subfield_degree);
    return linear_combination(f, a.coeffs(), traces);
}

int64_t abs_trace(const FieldElement& a) {
    FieldElement t = rel_trace(a, 1);
    return t.coeffs()[0];
}

FieldElement embed(const FieldElement& a_small, const FieldPtr& big) {
    if (a_small.field()->same_spec(*big)) return big->element(a_small.coeffs());
    const auto& data = big->embedding_from(a_small.field());
    const int64_t p = big->characteristic();
    std::vector<int64_t> acc(static_cast<size_t>(big->degree()), 0);
    const auto& c = a_small.coeffs();
    for (size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0) continue;
        const auto& rp = data.root_pows[t].coeffs();
        for (size_t k = 0; k < acc.size(); ++k) acc[k] = (acc[k] + c[t] * rp[k]) % p;
    }
    return big->element(std::move(acc));
}

std::vector<FieldElement> ground_coordinates(const FieldElement& a, const FieldPtr& ground) {
    const FieldPtr& big = a.field();
    const auto& data = big->embedding_from(ground);
    const int64_t p = big->characteristic();
    const size_t n = static_cast<size_t>(big->degree());
    const size_t s = static_cast<size_t>(ground->degree());
    const size_t m = n / s;

    std::vector<int64_t> v(n, 0);
    const auto& c = a.coeffs();
    for (size_t r = 0; r < n; ++r) {
        int64_t acc = 0;
        for (size_t k = 0; k < n; ++k) acc = (acc + data.coord_solver[r * n + k] * c[k]) % p;
        v[r] = acc;
    }

    std::vector<FieldElement> coords;
    coords.reserve(m);
    for (size_t j = 0; j < m; ++j) {
        std::vector<int64_t> gc(v.begin() + static_cast<long>(j * s),
                                v.begin() + static_cast<long>((j + 1) * s));
        coords.push_back(ground->element(std::move(gc)));
    }
    return coords;
}

FieldElement project(const FieldElement& a_big, const FieldPtr& ground) {
    std::vector<FieldElement> coords = ground_coordinates(a_big, ground);
    for (size_t j = 1; j < coords.size(); ++j) {
        if (!coords[j].is_zero())
            throw NotInSubfieldError("element does not lie in the embedded subfield GF(" +
                                     std::to_string(ground->order()) + ")");
    }
    return coords[0];
}

FieldElement project(const FieldElement& a_big, int subfield_degree) {
    return project(a_big, Field::make(a_big.field()->characteristic(), subfield_degree));
}

}  // namespace tracecode
