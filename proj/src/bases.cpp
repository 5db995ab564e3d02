#include "tracecode/bases.hpp"

#include <map>
#include <mutex>

#include "tracecode/matrix.hpp"

namespace tracecode {

namespace {

// Rows = ground coordinates of the given elements; rank test / solve input.
Matrix coordinate_matrix(const std::vector<FieldElement>& elems, const FieldPtr& ground) {
    const FieldPtr& big = elems.front().field();
    size_t m = static_cast<size_t>(big->degree() / ground->degree());
    Matrix mat(ground, elems.size(), m);
    for (size_t i = 0; i < elems.size(); ++i) {
        std::vector<FieldElement> coords = ground_coordinates(elems[i], ground);
        for (size_t j = 0; j < m; ++j) mat.set(i, j, coords[j]);
    }
    return mat;
}

}  // namespace

FieldBasis::FieldBasis(FieldPtr big, FieldPtr ground, std::vector<FieldElement> elements)
    : big_(std::move(big)), ground_(std::move(ground)), elements_(std::move(elements)) {
    big_->embedding_from(ground_);  // validates characteristic and divisibility
    const size_t m = static_cast<size_t>(big_->degree() / ground_->degree());
    if (elements_.size() != m)
        throw LengthMismatchError("a basis needs exactly " + std::to_string(m) + " elements");
    for (const auto& e : elements_)
        if (!e.field()->same_spec(*big_))
            throw SpecMismatchError("basis element belongs to a different field spec");
    if (rank(coordinate_matrix(elements_, ground_)) != m)
        throw SingularBasisError("basis elements are linearly dependent over the ground field");
}

FieldBasis FieldBasis::polynomial(const FieldPtr& big, const FieldPtr& ground) {
    const size_t m = static_cast<size_t>(big->degree() / ground->degree());
    std::vector<FieldElement> elems;
    elems.reserve(m);
    FieldElement pw = big->one();
    FieldElement g = big->gen();
    for (size_t j = 0; j < m; ++j) {
        elems.push_back(pw);
        pw = pw * g;
    }
    return FieldBasis(big, ground, std::move(elems));
}

bool operator==(const FieldBasis& a, const FieldBasis& b) {
    return a.big_->same_spec(*b.big_) && a.ground_->same_spec(*b.ground_) &&
           a.elements_ == b.elements_;
}

std::vector<FieldElement> coordinates(const FieldElement& a, const FieldBasis& basis) {
    if (!a.field()->same_spec(*basis.big()))
        throw SpecMismatchError("element and basis live in different fields");
    const size_t m = basis.size();
    // Solve M c = coords(a) where column j of M holds coords(basis_j).
    Matrix mat(basis.ground(), m, m);
    for (size_t j = 0; j < m; ++j) {
        std::vector<FieldElement> col = ground_coordinates(basis.elements()[j], basis.ground());
        for (size_t i = 0; i < m; ++i) mat.set(i, j, col[i]);
    }
    std::vector<FieldElement> rhs = ground_coordinates(a, basis.ground());
    auto sol = solve(mat, rhs);
    if (!sol) throw SingularBasisError("basis coordinate system is singular");  // unreachable
    return *sol;
}

FieldBasis dual_basis(const FieldBasis& basis) {
    const size_t m = basis.size();
    const int s = basis.ground()->degree();

    // Gram matrix T_ij = Tr(a_i a_j) over the ground field; a set of m
    // elements is a basis iff T is invertible, so this cannot fail here.
    Matrix gram(basis.ground(), m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            gram.set(i, j,
                     project(rel_trace(basis.elements()[i] * basis.elements()[j], s), basis.ground()));

    Matrix c = inverse(gram);
    std::vector<FieldElement> duals;
    duals.reserve(m);
    for (size_t j = 0; j < m; ++j) {
        FieldElement acc = basis.big()->zero();
        for (size_t k = 0; k < m; ++k)
            acc = acc + embed(c.at(k, j), basis.big()) * basis.elements()[k];
        duals.push_back(acc);
    }
    return FieldBasis(basis.big(), basis.ground(), std::move(duals));
}

bool is_normal_element(const FieldElement& a, const FieldPtr& ground) {
    const FieldPtr& big = a.field();
    big->embedding_from(ground);
    const int s = ground->degree();
    const size_t m = static_cast<size_t>(big->degree() / s);
    std::vector<FieldElement> conjugates;
    conjugates.reserve(m);
    FieldElement c = a;
    for (size_t i = 0; i < m; ++i) {
        conjugates.push_back(c);
        c = frobenius(c, s, 1);
    }
    return rank(coordinate_matrix(conjugates, ground)) == m;
}

FieldElement find_normal_element(const FieldPtr& big, const FieldPtr& ground) {
    static std::map<std::pair<std::string, std::string>, FieldElement> cache;
    static std::mutex mu;
    const auto key = std::make_pair(big->spec_string(), ground->spec_string());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    FieldElement g = big->generator();
    FieldElement x = big->one();
    for (uint64_t t = 0; t + 1 < big->order(); ++t) {
        if (is_normal_element(x, ground)) {
            std::lock_guard<std::mutex> lock(mu);
            cache.emplace(key, x);
            return x;
        }
        x = x * g;
    }
    throw Error("no normal element found");  // unreachable: normal bases exist
}

FieldElement find_normal_element(const FieldPtr& big, int subfield_degree) {
    return find_normal_element(big, Field::make(big->characteristic(), subfield_degree));
}

}  // namespace tracecode
