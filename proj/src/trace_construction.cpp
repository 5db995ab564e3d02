#include "tracecode/trace_construction.hpp"

#include <algorithm>

namespace tracecode {

DefiningSet::DefiningSet(FieldPtr big_in, FieldPtr ground_in, std::vector<FieldElement> elements_in)
    : big(std::move(big_in)), ground(std::move(ground_in)), elements(std::move(elements_in)) {
    big->embedding_from(ground);  // validates characteristic and divisibility
    if (elements.empty()) throw Error("a defining set must contain at least one element");
    for (const auto& e : elements)
        if (!e.field()->same_spec(*big))
            throw SpecMismatchError("defining-set element belongs to a different field spec");
}

size_t DefiningSet::trace_degree() const {
    return static_cast<size_t>(big->degree() / ground->degree());
}

std::vector<FieldElement> codeword(const FieldElement& x, const DefiningSet& d) {
    if (!x.field()->same_spec(*d.big))
        throw SpecMismatchError("x must live in the defining set's field");
    const int s = d.ground->degree();
    std::vector<FieldElement> word;
    word.reserve(d.length());
    for (const auto& di : d.elements) word.push_back(project(rel_trace(x * di, s), d.ground));
    return word;
}

size_t count_zero_traces(const FieldElement& x, const DefiningSet& d) {
    if (!x.field()->same_spec(*d.big))
        throw SpecMismatchError("x must live in the defining set's field");
    const int s = d.ground->degree();
    size_t count = 0;
    for (const auto& di : d.elements)
        if (rel_trace(x * di, s).is_zero()) ++count;
    return count;
}

LinearCode trace_code(const DefiningSet& d) {
    // codeword(x) is ground-linear in x, so the image of the ground basis
    // {1, gen, ..., gen^(m-1)} spans the whole codeword set.
    const size_t m = d.trace_degree();
    Matrix rows(d.ground, m, d.length());
    FieldElement x = d.big->one();
    FieldElement g = d.big->gen();
    for (size_t j = 0; j < m; ++j) {
        std::vector<FieldElement> word = codeword(x, d);
        for (size_t i = 0; i < word.size(); ++i) rows.set(j, i, word[i]);
        x = x * g;
    }
    return LinearCode(rows);
}

Matrix generator_matrix(const DefiningSet& d, const FieldBasis& basis) {
    if (!basis.big()->same_spec(*d.big) || !basis.ground()->same_spec(*d.ground))
        throw SpecMismatchError("basis and defining set live in different fields");
    const size_t m = d.trace_degree();
    Matrix mat(d.ground, m, d.length());
    for (size_t i = 0; i < d.length(); ++i) {
        std::vector<FieldElement> col = coordinates(d.elements[i], basis);
        for (size_t j = 0; j < m; ++j) mat.set(j, i, col[j]);
    }
    return mat;
}

CharacterSum::CharacterSum(int64_t p, std::vector<int64_t> counts)
    : p_(p), counts_(std::move(counts)) {
    if (p_ < 2 || counts_.size() != static_cast<size_t>(p_))
        throw Error("character sum needs one count per p-th root of unity");
    int64_t lo = *std::min_element(counts_.begin(), counts_.end());
    for (auto& c : counts_) c -= lo;
}

std::optional<int64_t> CharacterSum::integer_value() const {
    for (size_t t = 2; t < counts_.size(); ++t)
        if (counts_[t] != counts_[1]) return std::nullopt;
    return counts_[0] - counts_[1];
}

bool operator==(const CharacterSum& a, const CharacterSum& b) {
    return a.p_ == b.p_ && a.counts_ == b.counts_;
}

CharacterSum character_sum(const std::vector<FieldElement>& elements) {
    if (elements.empty()) throw Error("character sum of an empty multiset is ambiguous without a field");
    const int64_t p = elements.front().field()->characteristic();
    std::vector<int64_t> counts(static_cast<size_t>(p), 0);
    for (const auto& e : elements) {
        if (!e.field()->same_spec(*elements.front().field()))
            throw SpecMismatchError("character sum over mixed field specs");
        ++counts[static_cast<size_t>(abs_trace(e))];
    }
    return CharacterSum(p, std::move(counts));
}

int64_t weight_via_character_sum(const FieldElement& x, const DefiningSet& d) {
    if (!x.field()->same_spec(*d.big))
        throw SpecMismatchError("x must live in the defining set's field");
    const int64_t p = d.big->characteristic();
    const int64_t q = static_cast<int64_t>(d.ground->order());
    const int64_t n = static_cast<int64_t>(d.length());

    // Tally chi(y x d_i) over y in GF(q)*, d_i in D.
    std::vector<int64_t> counts(static_cast<size_t>(p), 0);
    std::vector<FieldElement> products;
    products.reserve(d.length());
    for (const auto& di : d.elements) products.push_back(x * di);
    for (uint64_t yi = 1; yi < d.ground->order(); ++yi) {
        FieldElement y = embed(d.ground->from_index(yi), d.big);
        for (const auto& z : products) ++counts[static_cast<size_t>(abs_trace(y * z))];
    }

    std::optional<int64_t> total = CharacterSum(p, std::move(counts)).integer_value();
    if (!total)
        throw NonIntegerSumError("character sum over GF(q)* is not a rational integer");
    int64_t numerator = (q - 1) * n - *total;
    if (numerator % q != 0)
        throw NonIntegerSumError("character-sum weight formula did not divide exactly");
    return numerator / q;
}

}  // namespace tracecode
