#include "tracecode/field.hpp"

#include <algorithm>
#include <sstream>

namespace tracecode {

namespace {

constexpr uint64_t kDlogCap = uint64_t(1) << 20;
constexpr uint64_t kIndexTableCap = 512;

int64_t mod_reduce(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Inverse mod p via extended Euclid.
int64_t mod_inverse(int64_t a, int64_t p) {
    int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw DivisionByZeroError("element has no inverse mod " + std::to_string(p));
    return mod_reduce(t, p);
}

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

// ---- raw polynomial arithmetic over GF(p) -----------------------------
// Coefficient vectors, ascending powers, used below the Field abstraction
// (modulus validation cannot assume a valid Field yet).

using RawPoly = std::vector<int64_t>;

int raw_deg(const RawPoly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

void raw_trim(RawPoly& a) { a.resize(static_cast<size_t>(raw_deg(a) + 1)); }

// Remainder of a by monic-ish b (leading coefficient inverted explicitly).
RawPoly raw_mod(RawPoly a, const RawPoly& b, int64_t p) {
    int db = raw_deg(b);
    int64_t lead_inv = mod_inverse(b[static_cast<size_t>(db)], p);
    for (int i = raw_deg(a); i >= db; --i) {
        int64_t c = mod_reduce(a[static_cast<size_t>(i)] * lead_inv, p);
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& slot = a[static_cast<size_t>(i - db + j)];
            slot = mod_reduce(slot - c * b[static_cast<size_t>(j)], p);
        }
    }
    raw_trim(a);
    return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, int64_t p) {
    if (a.empty() || b.empty()) return {};
    RawPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = mod_reduce(prod[i + j] + a[i] * b[j], p);
    }
    return raw_mod(std::move(prod), m, p);
}

// x^(p^e) mod f, exponent fits in u64 at the scales this library accepts.
RawPoly raw_x_pow_p_e(const RawPoly& f, int64_t p, int e) {
    uint64_t exp = 1;
    for (int i = 0; i < e; ++i) exp *= static_cast<uint64_t>(p);
    RawPoly result{1};
    RawPoly base = raw_mod({0, 1}, f, p);
    while (exp > 0) {
        if (exp & 1) result = raw_mulmod(result, base, f, p);
        base = raw_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return result;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, int64_t p) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        RawPoly r = raw_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Trial division against every monic polynomial of degree <= d/2 when that
// search space is small; Rabin's deterministic criterion otherwise. Both are
// exact.
bool raw_is_irreducible(const RawPoly& f, int64_t p) {
    int d = raw_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;

    uint64_t search = 0;
    bool small_search = true;
    for (int e = 1; e <= d / 2 && small_search; ++e) {
        uint64_t layer = 1;
        for (int i = 0; i < e; ++i) {
            layer *= static_cast<uint64_t>(p);
            if (layer > 100000) break;
        }
        search += layer;
        if (search > 10000) small_search = false;
    }

    if (small_search) {
        for (int e = 1; e <= d / 2; ++e) {
            uint64_t count = 1;
            for (int i = 0; i < e; ++i) count *= static_cast<uint64_t>(p);
            RawPoly div(static_cast<size_t>(e) + 1, 0);
            div[static_cast<size_t>(e)] = 1;
            for (uint64_t v = 0; v < count; ++v) {
                uint64_t t = v;
                for (int i = 0; i < e; ++i) {
                    div[static_cast<size_t>(i)] = static_cast<int64_t>(t % static_cast<uint64_t>(p));
                    t /= static_cast<uint64_t>(p);
                }
                if (raw_mod(f, div, p).empty()) return false;
            }
        }
        return true;
    }

    // x^(p^d) == x mod f, and gcd(x^(p^(d/t)) - x, f) == 1 for prime t | d.
    RawPoly xq = raw_x_pow_p_e(f, p, d);
    RawPoly x = raw_mod({0, 1}, f, p);
    RawPoly diff(std::max(xq.size(), x.size()), 0);
    for (size_t i = 0; i < diff.size(); ++i) {
        int64_t a = i < xq.size() ? xq[i] : 0;
        int64_t b = i < x.size() ? x[i] : 0;
        diff[i] = mod_reduce(a - b, p);
    }
    if (raw_deg(diff) >= 0) return false;
    for (int t = 2; t <= d; ++t) {
        if (d % t != 0 || !is_prime(t)) continue;
        RawPoly xe = raw_x_pow_p_e(f, p, d / t);
        RawPoly g(std::max(xe.size(), x.size()), 0);
        for (size_t i = 0; i < g.size(); ++i) {
            int64_t a = i < xe.size() ? xe[i] : 0;
            int64_t b = i < x.size() ? x[i] : 0;
            g[i] = mod_reduce(a - b, p);
        }
        if (raw_deg(raw_gcd(g, f, p)) != 0) return false;
    }
    return true;
}

// First monic irreducible of degree d over GF(p) in ascending
// coefficient-sequence order. The shipped table covers p in {2,3,5,7},
// d <= 16; the scan provably yields x^3+x+1, x^4+x+1 and x^7+x+1 at the
// (2,3), (2,4) and (2,7) entries.
RawPoly smallest_irreducible(int64_t p, int d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
    RawPoly f(static_cast<size_t>(d) + 1, 0);
    f[static_cast<size_t>(d)] = 1;
    for (uint64_t v = 0; v < count; ++v) {
        uint64_t t = v;
        for (int i = 0; i < d; ++i) {
            f[static_cast<size_t>(i)] = static_cast<int64_t>(t % static_cast<uint64_t>(p));
            t /= static_cast<uint64_t>(p);
        }
        if (raw_is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable
}

std::string spec_key(int64_t p, int d, const RawPoly& modulus) {
    std::ostringstream os;
    os << p << '/' << d << '/';
    for (size_t i = 0; i < modulus.size(); ++i) {
        if (i) os << ',';
        os << modulus[i];
    }
    return os.str();
}

std::map<std::string, FieldPtr>& intern_registry() {
    static std::map<std::string, FieldPtr> registry;
    return registry;
}

std::mutex& intern_mutex() {
    static std::mutex mu;
    return mu;
}

}  // namespace

// ---- FieldElement ------------------------------------------------------

bool FieldElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](int64_t c) { return c == 0; });
}

uint64_t FieldElement::index() const {
    uint64_t k = 0;
    uint64_t scale = 1;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        k += static_cast<uint64_t>(coeffs_[i]) * scale;
        scale *= static_cast<uint64_t>(field_->characteristic());
    }
    return k;
}

namespace {

void ensure_same_spec(const FieldElement& a, const FieldElement& b) {
    if (a.field().get() == b.field().get()) return;
    if (!a.field()->same_spec(*b.field()))
        throw SpecMismatchError("operands belong to different field specs");
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    ensure_same_spec(a, b);
    const int64_t p = a.field_->characteristic();
    std::vector<int64_t> c(a.coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(c[i] + b.coeffs_[i], p);
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    ensure_same_spec(a, b);
    const int64_t p = a.field_->characteristic();
    std::vector<int64_t> c(a.coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(c[i] - b.coeffs_[i], p);
    return FieldElement(a.field_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    const int64_t p = field_->characteristic();
    std::vector<int64_t> c(coeffs_);
    for (auto& v : c) v = mod_reduce(-v, p);
    return FieldElement(field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    ensure_same_spec(a, b);
    const int64_t p = a.field_->characteristic();
    const size_t d = a.coeffs_.size();
    std::vector<int64_t> prod(2 * d, 0);
    for (size_t i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j)
            prod[i + j] = mod_reduce(prod[i + j] + a.coeffs_[i] * b.coeffs_[j], p);
    }
    return FieldElement(a.field_, a.field_->reduce(std::move(prod)));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    const int64_t p = field_->characteristic();
    // Extended Euclid in GF(p)[x] against the modulus.
    RawPoly r0 = field_->modulus(), r1 = coeffs_;
    raw_trim(r1);
    RawPoly s0 = {}, s1 = {1};
    while (raw_deg(r1) > 0) {
        int dr0 = raw_deg(r0), dr1 = raw_deg(r1);
        RawPoly q(static_cast<size_t>(dr0 - dr1 + 1), 0);
        RawPoly rem = r0;
        int64_t lead_inv = mod_inverse(r1[static_cast<size_t>(dr1)], p);
        for (int i = dr0; i >= dr1; --i) {
            int64_t c = mod_reduce(rem[static_cast<size_t>(i)] * lead_inv, p);
            q[static_cast<size_t>(i - dr1)] = c;
            if (c == 0) continue;
            for (int j = 0; j <= dr1; ++j) {
                auto& slot = rem[static_cast<size_t>(i - dr1 + j)];
                slot = mod_reduce(slot - c * r1[static_cast<size_t>(j)], p);
            }
        }
        raw_trim(rem);
        // s_next = s0 - q * s1
        RawPoly qs(q.size() + (s1.empty() ? 1 : s1.size()), 0);
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j)
                qs[i + j] = mod_reduce(qs[i + j] + q[i] * s1[j], p);
        RawPoly s_next(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s_next.size(); ++i) {
            int64_t x = i < s0.size() ? s0[i] : 0;
            int64_t y = i < qs.size() ? qs[i] : 0;
            s_next[i] = mod_reduce(x - y, p);
        }
        raw_trim(s_next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_next);
    }
    if (raw_deg(r1) != 0) throw DivisionByZeroError("inverse of zero");
    int64_t scale = mod_inverse(r1[0], p);
    std::vector<int64_t> out(static_cast<size_t>(field_->degree()), 0);
    for (size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = mod_reduce(s1[i] * scale, p);
    return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::pow(int64_t e) const {
    uint64_t exp;
    FieldElement base = *this;
    if (e < 0) {
        base = inverse();
        exp = ~static_cast<uint64_t>(e) + 1;  // safe for INT64_MIN
    } else {
        exp = static_cast<uint64_t>(e);
    }
    if (exp == 0) return field_->one();
    FieldElement result = field_->one();
    while (exp > 0) {
        if (exp & 1) result = result * base;
        base = base * base;
        exp >>= 1;
    }
    return result;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_.get() != b.field_.get() && !a.field_->same_spec(*b.field_)) return false;
    return a.coeffs_ == b.coeffs_;
}

// ---- Field ---------------------------------------------------------------

Field::Field(int64_t p, int d, std::vector<int64_t> modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < d_; ++i) {
        if (order_ > (uint64_t(1) << 62) / static_cast<uint64_t>(p_))
            throw TooLargeError("field order exceeds 2^62");
        order_ *= static_cast<uint64_t>(p_);
    }
}

FieldPtr Field::make(int64_t p, int d) {
    if (!is_prime(p)) throw NotPrimeError("characteristic " + std::to_string(p) + " is not prime");
    if (d < 1) throw Error("extension degree must be >= 1");
    if ((p != 2 && p != 3 && p != 5 && p != 7) || d > 16)
        throw NoDefaultModulusError("no default modulus shipped for p=" + std::to_string(p) +
                                    ", d=" + std::to_string(d) + "; supply one explicitly");
    return make(p, d, smallest_irreducible(p, d));
}

FieldPtr Field::make(int64_t p, int d, const std::vector<int64_t>& modulus) {
    if (!is_prime(p)) throw NotPrimeError("characteristic " + std::to_string(p) + " is not prime");
    if (d < 1) throw Error("extension degree must be >= 1");
    if (modulus.size() != static_cast<size_t>(d) + 1)
        throw Error("modulus must list exactly d+1 ascending coefficients");
    std::vector<int64_t> m(modulus);
    for (auto& c : m) c = mod_reduce(c, p);
    if (m.back() != 1) throw Error("modulus must be monic");
    if (!raw_is_irreducible(m, p))
        throw ReducibleModulusError("modulus is reducible over GF(" + std::to_string(p) + ")");

    const std::string key = spec_key(p, d, m);
    std::lock_guard<std::mutex> lock(intern_mutex());
    auto& registry = intern_registry();
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
    FieldPtr f(new Field(p, d, std::move(m)));
    registry.emplace(key, f);
    return f;
}

bool Field::same_spec(const Field& other) const {
    return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
}

std::string Field::spec_string() const {
    std::ostringstream os;
    os << "p=" << p_ << ",d=" << d_ << ",modulus=";
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) os << ',';
        os << modulus_[i];
    }
    return os.str();
}

std::vector<int64_t> Field::reduce(std::vector<int64_t> c) const {
    for (auto& v : c) v = mod_reduce(v, p_);
    if (static_cast<int>(c.size()) > d_) {
        c = raw_mod(std::move(c), modulus_, p_);
    }
    c.resize(static_cast<size_t>(d_), 0);
    return c;
}

FieldElement Field::make_element(std::vector<int64_t> c) const {
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::zero() const { return make_element(std::vector<int64_t>(static_cast<size_t>(d_), 0)); }

FieldElement Field::one() const {
    std::vector<int64_t> c(static_cast<size_t>(d_), 0);
    c[0] = 1;
    return make_element(std::move(c));
}

FieldElement Field::gen() const {
    std::vector<int64_t> c(static_cast<size_t>(d_), 0);
    if (d_ == 1) {
        // Degree-1 modulus x + c0: the class of x is the constant -c0.
        c[0] = mod_reduce(-modulus_[0], p_);
    } else {
        c[1] = 1;
    }
    return make_element(std::move(c));
}

FieldElement Field::element(std::vector<int64_t> coeffs) const {
    if (coeffs.size() > static_cast<size_t>(d_))
        return make_element(reduce(std::move(coeffs)));
    for (auto& v : coeffs) v = mod_reduce(v, p_);
    coeffs.resize(static_cast<size_t>(d_), 0);
    return make_element(std::move(coeffs));
}

FieldElement Field::from_index(uint64_t k) const {
    if (k >= order_) throw Error("element index out of range");
    std::vector<int64_t> c(static_cast<size_t>(d_), 0);
    for (int i = 0; i < d_ && k > 0; ++i) {
        c[static_cast<size_t>(i)] = static_cast<int64_t>(k % static_cast<uint64_t>(p_));
        k /= static_cast<uint64_t>(p_);
    }
    return make_element(std::move(c));
}

const std::vector<uint64_t>& Field::group_order_prime_factors() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (order_factors_.empty() && order_ > 1) {
        uint64_t n = order_ - 1;
        for (uint64_t f = 2; f * f <= n; ++f) {
            if (n % f == 0) {
                order_factors_.push_back(f);
                while (n % f == 0) n /= f;
            }
        }
        if (n > 1) order_factors_.push_back(n);
    }
    return order_factors_;
}

FieldElement Field::generator() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (!generator_) {
        for (uint64_t k = 1; k < order_; ++k) {
            FieldElement cand = from_index(k);
            if (mult_order(cand) == order_ - 1) {
                generator_ = cand;
                break;
            }
        }
    }
    return *generator_;
}

bool Field::dlog_available() const { return order_ <= kDlogCap; }

uint64_t Field::dlog(const FieldElement& a) const {
    if (!dlog_available()) throw TooLargeError("discrete-log table limited to orders <= 2^20");
    if (a.is_zero()) throw ZeroElementError("zero has no discrete log");
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (!dlog_built_) {
        dlog_table_.assign(order_, 0);
        FieldElement g = generator();
        FieldElement cur = one();
        for (uint64_t e = 0; e + 1 < order_; ++e) {
            dlog_table_[cur.index()] = static_cast<uint32_t>(e);
            cur = cur * g;
        }
        dlog_built_ = true;
    }
    return dlog_table_[a.index()];
}

// Publishes the tables with a release store; readers use an acquire load so
// the hot index paths stay lock-free after the first call.
void Field::build_index_tables() const {
    if (index_tabs_ready_.load(std::memory_order_acquire)) return;
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (index_tabs_ready_.load(std::memory_order_relaxed)) return;
    add_tab_.resize(order_ * order_);
    mul_tab_.resize(order_ * order_);
    neg_tab_.resize(order_);
    inv_tab_.assign(order_, 0);
    for (uint64_t i = 0; i < order_; ++i) {
        FieldElement x = from_index(i);
        neg_tab_[i] = static_cast<uint32_t>((-x).index());
        if (i) inv_tab_[i] = static_cast<uint32_t>(x.inverse().index());
        for (uint64_t j = 0; j < order_; ++j) {
            FieldElement y = from_index(j);
            add_tab_[i * order_ + j] = static_cast<uint32_t>((x + y).index());
            mul_tab_[i * order_ + j] = static_cast<uint32_t>((x * y).index());
        }
    }
    index_tabs_ready_.store(true, std::memory_order_release);
}

uint64_t Field::add_index(uint64_t a, uint64_t b) const {
    if (order_ <= kIndexTableCap) {
        build_index_tables();
        return add_tab_[a * order_ + b];
    }
    return (from_index(a) + from_index(b)).index();
}

uint64_t Field::mul_index(uint64_t a, uint64_t b) const {
    if (order_ <= kIndexTableCap) {
        build_index_tables();
        return mul_tab_[a * order_ + b];
    }
    return (from_index(a) * from_index(b)).index();
}

uint64_t Field::neg_index(uint64_t a) const {
    if (order_ <= kIndexTableCap) {
        build_index_tables();
        return neg_tab_[a];
    }
    return (-from_index(a)).index();
}

uint64_t Field::inv_index(uint64_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    if (order_ <= kIndexTableCap) {
        build_index_tables();
        return inv_tab_[a];
    }
    return from_index(a).inverse().index();
}

// ---- free functions ------------------------------------------------------

uint64_t mult_order(const FieldElement& a) {
    if (a.is_zero()) throw ZeroElementError("zero has no multiplicative order");
    const Field& f = *a.field();
    uint64_t t = f.order() - 1;
    if (t == 0) return 1;
    for (uint64_t prime : f.group_order_prime_factors()) {
        while (t % prime == 0 && a.pow(static_cast<int64_t>(t / prime)).is_one()) t /= prime;
    }
    return t;
}

FieldElement find_generator(const FieldPtr& field) { return field->generator(); }

}  // namespace tracecode
