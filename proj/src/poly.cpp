#include "uqg/poly.hpp"

#include <algorithm>
#include <random>

#include "uqg/error.hpp"

namespace uqg {

namespace {
constexpr uint64_t kScanLimit = 4096;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    trim(r);
    return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    trim(r);
    return r;
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly poly_scale(const Field& F, const Poly& a, Elem c) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    trim(r);
    return r;
}

void poly_divmod(const Field& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.empty()) fail("DivisionByZero", "polynomial division by zero");
    rem = a;
    trim(rem);
    const size_t db = b.size() - 1;
    const Elem lead_inv = F.inv(b.back());
    quot.assign(rem.size() >= b.size() ? rem.size() - db : 0, 0);
    while (rem.size() >= b.size()) {
        const size_t shift = rem.size() - 1 - db;
        const Elem c = F.mul(rem.back(), lead_inv);
        quot[shift] = c;
        for (size_t i = 0; i <= db; ++i) rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b[i]));
        trim(rem);
    }
    trim(quot);
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(F, a, b, q, r);
    return r;
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.empty()) return a;
    return poly_scale(F, a, F.inv(a.back()));
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

Poly poly_powmod(const Field& F, const Poly& base, uint64_t e, const Poly& m) {
    Poly result = poly_mod(F, Poly{1}, m);
    Poly b = poly_mod(F, base, m);
    while (e) {
        if (e & 1) result = poly_mod(F, poly_mul(F, result, b), m);
        e >>= 1;
        if (e) b = poly_mod(F, poly_mul(F, b, b), m);
    }
    return result;
}

Elem poly_eval(const Field& F, const Poly& f, Elem x) {
    Elem acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

Poly poly_embed(const FieldPtr& sub, const FieldPtr& sup, const Poly& f) {
    if (sub->id() == sup->id()) return f;
    auto emb = Embedding::get(sub, sup);
    Poly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = emb->map(f[i]);
    return r;
}

namespace {

// gcd(f, x^|F| - x): the product of the distinct linear factors of f.
Poly split_part(const Field& F, const Poly& f) {
    Poly m = poly_monic(F, f);
    if (degree(m) <= 0) return Poly{1};
    Poly xq = poly_powmod(F, Poly{0, 1}, F.size(), m);
    Poly t = poly_sub(F, xq, Poly{0, 1});
    if (t.empty()) return m;
    return poly_gcd(F, m, t);
}

void split_linear(const Field& F, const Poly& g, std::mt19937_64& rng, std::vector<Elem>& out) {
    const int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(F.neg(F.div(g[0], g[1])));
        return;
    }
    std::uniform_int_distribution<uint64_t> pick(0, F.size() - 1);
    for (int attempt = 0; attempt < 256; ++attempt) {
        const Elem a = static_cast<Elem>(pick(rng));
        Poly h;
        if (F.p() == 2) {
            // Absolute trace of a*x over GF(2^k).
            Poly y = poly_mod(F, Poly{0, a}, g);
            Poly acc = y;
            for (uint32_t i = 1; i < F.k(); ++i) {
                y = poly_mod(F, poly_mul(F, y, y), g);
                acc = poly_add(F, acc, y);
            }
            h = acc;
        } else {
            h = poly_powmod(F, Poly{a, 1}, (F.size() - 1) / 2, g);
            h = poly_sub(F, h, Poly{1});
        }
        Poly c = poly_gcd(F, g, h);
        const int dc = degree(c);
        if (dc <= 0 || dc >= d) continue;
        Poly quot, rem;
        poly_divmod(F, g, c, quot, rem);
        split_linear(F, c, rng, out);
        split_linear(F, poly_monic(F, quot), rng, out);
        return;
    }
    fail("SearchFailed", "equal-degree splitting did not converge");
}

}  // namespace

std::vector<Elem> distinct_roots(const Field& F, const Poly& f) {
    Poly g = f;
    trim(g);
    if (g.empty()) fail("ZeroPolynomial", "roots of the zero polynomial");
    std::vector<Elem> out;
    if (F.size() <= kScanLimit) {
        for (Elem x = 0; x < F.size(); ++x)
            if (poly_eval(F, g, x) == 0) out.push_back(x);
        return out;
    }
    Poly s = split_part(F, g);
    std::mt19937_64 rng(0x5eedULL + F.size());
    split_linear(F, s, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t count_distinct_roots(const Field& F, const Poly& f) {
    Poly g = f;
    trim(g);
    if (g.empty()) fail("ZeroPolynomial", "roots of the zero polynomial");
    return static_cast<uint64_t>(std::max(0, degree(split_part(F, g))));
}

std::vector<Root> roots_in(const FieldPtr& coeff_field, const Poly& f, const FieldPtr& target) {
    Poly g = f;
    trim(g);
    if (g.empty()) fail("ZeroPolynomial", "roots of the zero polynomial");
    if (degree(g) > 3) fail("DegreeTooHigh", "root finding is limited to degree 3");
    const Field& T = *target;
    Poly h = poly_embed(coeff_field, target, g);
    std::vector<Root> out;
    for (Elem r : distinct_roots(T, h)) {
        uint32_t mult = 0;
        Poly cur = h;
        const Poly lin{T.neg(r), 1};
        for (;;) {
            Poly quot, rem;
            poly_divmod(T, cur, lin, quot, rem);
            if (!rem.empty()) break;
            ++mult;
            cur = std::move(quot);
        }
        out.push_back({r, mult});
    }
    return out;
}

}  // namespace uqg
