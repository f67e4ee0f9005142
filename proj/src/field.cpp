#include "uqg/field.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>

#include "uqg/arith.hpp"
#include "uqg/error.hpp"

namespace uqg {

namespace {

constexpr uint64_t kTableLimit = 1u << 20;
constexpr uint64_t kFullTableLimit = 1024;
constexpr uint32_t kNone = 0xFFFFFFFFu;
constexpr uint32_t kMaxDegree = 18;

bool fits_u32(uint64_t p, uint32_t k) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < k; ++i) {
        v *= p;
        if (v >= (uint64_t{1} << 32)) return false;
    }
    return true;
}

// Dense polynomials over GF(p) with small p, used only to vet moduli.
using PPoly = std::vector<uint64_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, uint64_t p) {
    ptrim(a);
    const size_t dm = m.size() - 1;
    uint64_t lead_inv = 1;
    for (uint64_t e = p - 2, b = m.back() % p; e; e >>= 1, b = b * b % p)
        if (e & 1) lead_inv = lead_inv * b % p;
    while (a.size() > dm) {
        uint64_t c = a.back() * lead_inv % p;
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        ptrim(a);
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return pmod(std::move(r), m, p);
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^j) mod m
PPoly frob_power_x(const PPoly& m, uint64_t p, uint32_t j) {
    PPoly r = pmod(PPoly{0, 1}, m, p);
    for (uint32_t s = 0; s < j; ++s) {
        PPoly acc{1};
        PPoly base = r;
        for (uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = pmulmod(acc, base, m, p);
            base = pmulmod(base, base, m, p);
        }
        r = acc;
    }
    return r;
}

struct Registry {
    std::mutex mu;
    std::vector<FieldPtr> by_id;
    std::map<std::pair<uint32_t, std::vector<uint32_t>>, uint32_t> by_modulus;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> canonical;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

bool irreducible_mod_p(uint32_t p, const std::vector<uint32_t>& monic) {
    const uint32_t k = static_cast<uint32_t>(monic.size()) - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    if (monic[0] % p == 0) return false;
    PPoly m(monic.begin(), monic.end());
    // x^(p^k) == x mod m, and no factor of degree k/r for prime r | k.
    PPoly xk = frob_power_x(m, p, k);
    PPoly x = pmod(PPoly{0, 1}, m, p);
    if (xk != x) return false;
    for (uint64_t r : prime_factors(k)) {
        PPoly t = frob_power_x(m, p, k / static_cast<uint32_t>(r));
        t.resize(std::max<size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        ptrim(t);
        PPoly g = pgcd(m, t, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<uint32_t> canonical_modulus(uint32_t p, uint32_t k) {
    const uint64_t count = ipow(p, k);
    std::vector<uint32_t> m(k + 1, 0);
    m[k] = 1;
    for (uint64_t n = 0; n < count; ++n) {
        // Enumerate by the integer code sum a_i p^i.
        uint64_t r = n;
        for (uint32_t i = 0; i < k; ++i) {
            m[i] = static_cast<uint32_t>(r % p);
            r /= p;
        }
        if (k > 1 && m[0] == 0) continue;
        if (irreducible_mod_p(p, m)) return m;
    }
    fail("NoIrreducible", "no irreducible polynomial found");
}

FieldPtr Field::make(uint32_t p, uint32_t k) {
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    if (k < 1 || k > kMaxDegree || !fits_u32(p, k))
        fail("DegreeOutOfRange", "degree " + std::to_string(k) + " unsupported for p=" + std::to_string(p));
    auto& reg = registry();
    {
        std::lock_guard lock(reg.mu);
        auto it = reg.canonical.find({p, k});
        if (it != reg.canonical.end()) return reg.by_id[it->second];
    }
    FieldPtr f = with_modulus(p, canonical_modulus(p, k));
    std::lock_guard lock(reg.mu);
    reg.canonical.emplace(std::make_pair(p, k), f->id());
    return f;
}

FieldPtr Field::with_modulus(uint32_t p, const std::vector<uint32_t>& modulus) {
    if (!is_prime(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    const uint32_t k = static_cast<uint32_t>(modulus.size()) - 1;
    if (modulus.size() < 2 || modulus.back() != 1) fail("BadModulus", "modulus must be monic");
    if (k > kMaxDegree || !fits_u32(p, k))
        fail("DegreeOutOfRange", "degree " + std::to_string(k) + " unsupported");
    if (!irreducible_mod_p(p, modulus)) fail("BadModulus", "modulus is reducible");
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    auto key = std::make_pair(p, modulus);
    auto it = reg.by_modulus.find(key);
    if (it != reg.by_modulus.end()) return reg.by_id[it->second];
    const uint32_t id = static_cast<uint32_t>(reg.by_id.size());
    FieldPtr f(new Field(p, modulus, id));
    reg.by_id.push_back(f);
    reg.by_modulus.emplace(key, id);
    return f;
}

FieldPtr Field::by_id(uint32_t id) {
    auto& reg = registry();
    std::lock_guard lock(reg.mu);
    if (id >= reg.by_id.size()) fail("UnknownField", "no field with id " + std::to_string(id));
    return reg.by_id[id];
}

Field::Field(uint32_t p, std::vector<uint32_t> modulus, uint32_t id)
    : p_(p), k_(static_cast<uint32_t>(modulus.size()) - 1), id_(id), mod_(std::move(modulus)) {
    size_ = ipow(p_, k_);
    pw_.resize(k_ + 1);
    pw_[0] = 1;
    for (uint32_t i = 1; i <= k_; ++i) pw_[i] = pw_[i - 1] * p_;
    order_primes_ = prime_factors(size_ - 1);
    if (size_ == 2) {
        prim_ = 1;
    } else {
        for (Elem g = 1; g < size_; ++g) {
            if (g == 1) continue;
            bool ok = true;
            for (uint64_t r : order_primes_)
                if (pow_slow(g, (size_ - 1) / r) == 1) { ok = false; break; }
            if (ok) { prim_ = g; break; }
        }
    }
    if (size_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
    const uint64_t n = size_ - 1;
    exp_.assign(2 * n + 1, 0);
    log_.assign(size_, 0);
    Elem cur = 1;
    for (uint64_t i = 0; i < n; ++i) {
        exp_[i] = cur;
        log_[cur] = static_cast<uint32_t>(i);
        cur = mul_slow(cur, prim_);
    }
    for (uint64_t i = n; i <= 2 * n; ++i) exp_[i] = exp_[i - n];
    neg_tab_.resize(size_);
    for (Elem a = 0; a < size_; ++a) neg_tab_[a] = neg_slow(a);
    if (p_ != 2) {
        zech_.assign(n, kNone);
        for (uint64_t i = 0; i < n; ++i) {
            Elem x = exp_[i];
            Elem c0 = x % p_;
            Elem y = x - c0 + (c0 + 1) % p_;
            zech_[i] = y == 0 ? kNone : log_[y];
        }
    }
    tabled_ = true;
    if (size_ <= kFullTableLimit) {
        add_tab_.resize(size_ * size_);
        mul_tab_.resize(size_ * size_);
        for (Elem a = 0; a < size_; ++a)
            for (Elem b = 0; b < size_; ++b) {
                add_tab_[a * size_ + b] = static_cast<uint16_t>(p_ == 2 ? (a ^ b) : add_zech(a, b));
                mul_tab_[a * size_ + b] =
                    static_cast<uint16_t>((a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]]);
            }
        full_ = true;
    }
}

Elem Field::add_zech(Elem a, Elem b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const uint64_t n = size_ - 1;
    uint32_t la = log_[a], lb = log_[b];
    uint32_t d = lb >= la ? lb - la : static_cast<uint32_t>(lb + n - la);
    uint32_t z = zech_[d];
    if (z == kNone) return 0;
    return exp_[la + z];
}

Elem Field::add_slow(Elem a, Elem b) const {
    Elem r = 0;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t s = (a % p_ + b % p_) % p_;
        r += static_cast<Elem>(s * pw_[i]);
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem Field::neg_slow(Elem a) const {
    Elem r = 0;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t d = a % p_;
        r += static_cast<Elem>(((p_ - d) % p_) * pw_[i]);
        a /= p_;
    }
    return r;
}

Elem Field::mul_slow(Elem a, Elem b) const {
    std::array<uint64_t, 2 * kMaxDegree> da{}, db{}, pr{};
    for (uint32_t i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < k_; ++i) {
        if (!da[i]) continue;
        for (uint32_t j = 0; j < k_; ++j) pr[i + j] = (pr[i + j] + da[i] * db[j]) % p_;
    }
    for (uint32_t i = 2 * k_ - 1; i-- > k_;) {
        uint64_t c = pr[i];
        if (!c) continue;
        pr[i] = 0;
        for (uint32_t j = 0; j < k_; ++j)
            pr[i - k_ + j] = (pr[i - k_ + j] + (p_ - c) * mod_[j]) % p_;
    }
    Elem r = 0;
    for (uint32_t i = 0; i < k_; ++i) r += static_cast<Elem>(pr[i] * pw_[i]);
    return r;
}

Elem Field::pow_slow(Elem a, uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul_slow(r, a);
        a = mul_slow(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::pow(Elem a, uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const uint64_t n = size_ - 1;
    if (tabled_) return exp_[(static_cast<uint64_t>(log_[a]) * (e % n)) % n];
    return pow_slow(a, e % n == 0 ? n : e % n);
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail("DivisionByZero", "inverse of zero");
    if (tabled_) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
    return pow_slow(a, size_ - 2);
}

Elem Field::frobenius(Elem a, uint32_t j) const {
    if (a == 0) return 0;
    const uint64_t n = size_ - 1;
    uint64_t e = 1;
    for (uint32_t i = 0; i < j % k_; ++i) e = e * p_ % n;
    return pow(a, e == 0 ? n : e);
}

Elem Field::generator() const {
    if (k_ == 1) return from_int(-static_cast<int64_t>(mod_[0]));
    return static_cast<Elem>(p_);
}

uint64_t Field::mult_order(Elem a) const {
    if (a == 0) fail("ZeroElement", "multiplicative order of zero");
    uint64_t ord = size_ - 1;
    for (uint64_t r : order_primes_)
        while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
    return ord;
}

uint32_t Field::log(Elem a) const {
    if (!tabled_) fail("FieldTooLarge", "discrete log needs tables");
    if (a == 0) fail("ZeroElement", "log of zero");
    return log_[a];
}

Elem Field::exp(uint64_t n) const {
    if (tabled_) return exp_[n % (size_ - 1)];
    return pow_slow(prim_, n % (size_ - 1));
}

Elem Field::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

Elem Field::from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > k_) fail("BadElement", "too many coefficients");
    Elem r = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_) fail("BadElement", "coefficient out of range");
        r += static_cast<Elem>(c[i] * pw_[i]);
    }
    return r;
}

std::vector<uint32_t> Field::coeffs(Elem a) const {
    std::vector<uint32_t> c(k_);
    for (uint32_t i = 0; i < k_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elem Field::unwrap(const FieldElem& a) const {
    if (a.ctx != id_) fail("CtxMismatch", "element belongs to another field");
    return a.code;
}

std::vector<uint32_t> FieldElem::coeffs() const { return Field::by_id(ctx)->coeffs(code); }

namespace {
FieldPtr same_field(const FieldElem& a, const FieldElem& b) {
    if (a.ctx != b.ctx) fail("CtxMismatch", "operands live in different fields");
    return Field::by_id(a.ctx);
}
}  // namespace

FieldElem add(const FieldElem& a, const FieldElem& b) {
    auto f = same_field(a, b);
    return f->wrap(f->add(a.code, b.code));
}
FieldElem sub(const FieldElem& a, const FieldElem& b) {
    auto f = same_field(a, b);
    return f->wrap(f->sub(a.code, b.code));
}
FieldElem mul(const FieldElem& a, const FieldElem& b) {
    auto f = same_field(a, b);
    return f->wrap(f->mul(a.code, b.code));
}
FieldElem div(const FieldElem& a, const FieldElem& b) {
    auto f = same_field(a, b);
    return f->wrap(f->div(a.code, b.code));
}
FieldElem pow(const FieldElem& a, uint64_t e) {
    auto f = Field::by_id(a.ctx);
    return f->wrap(f->pow(a.code, e));
}
FieldElem frobenius(const FieldElem& a, uint32_t j) {
    auto f = Field::by_id(a.ctx);
    return f->wrap(f->frobenius(a.code, j));
}
uint64_t mult_order(const FieldElem& a) { return Field::by_id(a.ctx)->mult_order(a.code); }

// ---------------------------------------------------------------------------

Embedding::Embedding(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_->p() != sup_->p() || sup_->k() % sub_->k() != 0)
        fail("NotASubfield", "GF(" + std::to_string(sub_->size()) + ") does not embed in GF(" +
                                 std::to_string(sup_->size()) + ")");
    const Field& F = *sup_;
    const auto& m = sub_->modulus();
    auto is_root = [&](Elem h) {
        Elem acc = 0;
        for (size_t i = m.size(); i-- > 0;) acc = F.add(F.mul(acc, h), F.from_int(m[i]));
        return acc == 0;
    };
    if (sub_->k() == 1) {
        gen_image_ = F.from_int(-static_cast<int64_t>(m[0]));
    } else {
        // Scan the copy of GF(p^s)* inside the larger field, as powers of a
        // primitive element, for a root of the smaller field's modulus.
        const uint64_t step = (F.size() - 1) / (sub_->size() - 1);
        const Elem base = F.pow(F.primitive(), step);
        Elem h = base;
        bool found = false;
        for (uint64_t j = 1; j < sub_->size() - 1 + 1; ++j, h = F.mul(h, base)) {
            if (is_root(h)) { found = true; break; }
        }
        if (!found) fail("NotASubfield", "no root of the subfield modulus found");
        gen_image_ = h;
    }
    if (sub_->size() <= (1u << 16)) {
        table_.resize(sub_->size());
        for (Elem a = 0; a < sub_->size(); ++a) {
            auto c = sub_->coeffs(a);
            Elem acc = 0;
            for (size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, gen_image_), F.from_int(c[i]));
            table_[a] = acc;
            back_.emplace(acc, a);
        }
    }
}

Elem Embedding::map(Elem a) const {
    if (!table_.empty()) return table_[a];
    const Field& F = *sup_;
    auto c = sub_->coeffs(a);
    Elem acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, gen_image_), F.from_int(c[i]));
    return acc;
}

std::optional<Elem> Embedding::preimage(Elem b) const {
    if (table_.empty()) fail("FieldTooLarge", "preimage needs a small subfield");
    auto it = back_.find(b);
    if (it == back_.end()) return std::nullopt;
    return it->second;
}

std::shared_ptr<const Embedding> Embedding::get(const FieldPtr& sub, const FieldPtr& sup) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const Embedding>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(sub->id(), sup->id());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto e = std::make_shared<const Embedding>(sub, sup);
    cache.emplace(key, e);
    return e;
}

FieldElem embed(const FieldPtr& sub, const FieldPtr& sup, const FieldElem& a) {
    auto e = Embedding::get(sub, sup);
    return sup->wrap(e->map(sub->unwrap(a)));
}

}  // namespace uqg
