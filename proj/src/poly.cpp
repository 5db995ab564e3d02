#include "tracecode/poly.hpp"

#include <algorithm>

namespace tracecode {

namespace {

void ensure_same_field(const Poly& a, const Poly& b) {
    if (a.field().get() == b.field().get()) return;
    if (!a.field()->same_spec(*b.field()))
        throw SpecMismatchError("polynomials belong to different field specs");
}

std::vector<FieldElement> trim(std::vector<FieldElement> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

}  // namespace

Poly::Poly(FieldPtr f, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), coeffs_(trim(std::move(coeffs))) {
    for (const auto& c : coeffs_)
        if (!c.field()->same_spec(*field_))
            throw SpecMismatchError("coefficient belongs to a different field spec");
}

Poly Poly::from_ints(const FieldPtr& f, const std::vector<int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(f->element({v}));
    return Poly(f, std::move(c));
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
    return coeffs_[static_cast<size_t>(i)];
}

FieldElement Poly::leading_coeff() const {
    if (is_zero()) throw DivisionByZeroError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool Poly::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

Poly Poly::to_monic() const {
    if (is_zero() || is_monic()) return *this;
    FieldElement inv = coeffs_.back().inverse();
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(v * inv);
    return Poly(field_, std::move(c));
}

FieldElement Poly::eval(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw Error("shift amount must be >= 0");
    if (is_zero() || k == 0) return *this;
    std::vector<FieldElement> c(static_cast<size_t>(k), field_->zero());
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Poly(field_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    ensure_same_field(a, b);
    std::vector<FieldElement> c;
    size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    c.reserve(n);
    for (size_t i = 0; i < n; ++i) c.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    ensure_same_field(a, b);
    std::vector<FieldElement> c;
    size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    c.reserve(n);
    for (size_t i = 0; i < n; ++i) c.push_back(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)));
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    ensure_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(a.field_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (!a.field_->same_spec(*b.field_)) return false;
    return a.coeffs_ == b.coeffs_;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    ensure_same_field(a, b);
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(a.field()), a};

    FieldElement lead_inv = b.leading_coeff().inverse();
    std::vector<FieldElement> rem(a.coeffs());
    std::vector<FieldElement> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, a.field()->zero());
    for (int i = a.degree(); i >= b.degree(); --i) {
        FieldElement c = rem[static_cast<size_t>(i)] * lead_inv;
        quo[static_cast<size_t>(i - b.degree())] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            size_t k = static_cast<size_t>(i - b.degree() + j);
            rem[k] = rem[k] - c * b.coeff(j);
        }
    }
    return {Poly(a.field(), std::move(quo)), Poly(a.field(), std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    ensure_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.to_monic();
}

Poly reciprocal(const Poly& h, int degree_hint) {
    if (h.is_zero()) return h;
    int e = std::max(h.degree(), degree_hint);
    std::vector<FieldElement> c;
    c.reserve(static_cast<size_t>(e) + 1);
    for (int i = e; i >= 0; --i) c.push_back(h.coeff(i));
    return Poly(h.field(), std::move(c)).to_monic();
}

Poly x_pow_minus_one(const FieldPtr& f, int n) {
    if (n < 1) throw Error("length must be >= 1");
    std::vector<FieldElement> c(static_cast<size_t>(n) + 1, f->zero());
    c[0] = -f->one();
    c[static_cast<size_t>(n)] = f->one();
    return Poly(f, std::move(c));
}

Poly min_poly(const FieldElement& a, const FieldPtr& ground) {
    const FieldPtr& big = a.field();
    big->embedding_from(ground);  // validates characteristic and divisibility
    const int s = ground->degree();

    // Frobenius orbit of a.
    std::vector<FieldElement> orbit{a};
    FieldElement conj = frobenius(a, s, 1);
    while (conj != a) {
        orbit.push_back(conj);
        conj = frobenius(conj, s, 1);
    }

    Poly prod(big, {big->one()});
    for (const auto& root : orbit) {
        Poly factor(big, {-root, big->one()});
        prod = prod * factor;
    }

    std::vector<FieldElement> coeffs;
    coeffs.reserve(orbit.size() + 1);
    for (int i = 0; i <= prod.degree(); ++i) coeffs.push_back(project(prod.coeff(i), ground));
    return Poly(ground, std::move(coeffs));
}

Poly min_poly(const FieldElement& a, int subfield_degree) {
    return min_poly(a, Field::make(a.field()->characteristic(), subfield_degree));
}

}  // namespace tracecode
