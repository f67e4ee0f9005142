#include "uqg/classifier.hpp"

#include "uqg/arith.hpp"
#include "uqg/error.hpp"
#include "uqg/group.hpp"

namespace uqg {

std::string etype_name(EType t) {
    switch (t) {
        case EType::A: return "A";
        case EType::B1: return "B1";
        case EType::B2: return "B2";
        case EType::B3: return "B3";
        case EType::C: return "C";
        case EType::D: return "D";
        case EType::E: return "E";
    }
    return "?";
}

EType parse_etype(const std::string& name) {
    for (int i = 0; i < kETypeCount; ++i)
        if (etype_name(static_cast<EType>(i)) == name) return static_cast<EType>(i);
    fail("UnknownType", "unknown element type '" + name + "'");
}

uint32_t contribution(EType t, uint32_t q) {
    switch (t) {
        case EType::A: return q + 1;
        case EType::B1: return 0;
        case EType::B2: return 2;
        case EType::B3: return 3;
        case EType::C: return q + 2;
        case EType::D: return 2;
        case EType::E: return 1;
    }
    return 0;
}

namespace {

[[noreturn]] void unclassifiable(uint64_t m, uint64_t n, const std::string& why) {
    fail("Unclassifiable", "order " + std::to_string(m) + ", " + std::to_string(n) + " fixed points: " + why);
}

ElementClass make_class(EType t, uint64_t m, uint32_t q) { return {t, m, contribution(t, q)}; }

}  // namespace

ElementClass classify(const HermitianModel& model, const Mat3& M) {
    const uint64_t q = model.q, p = model.p;
    const uint64_t m = proj_order(model, M);
    if (m == 1) fail("IdentityElement", "the identity has no type");
    const uint64_t N = fixed_point_count(model.field, M, model.field);
    if (m % p == 0) {
        if (m == p) {
            if (N == q * q + 1) return make_class(EType::C, m, model.q);
            if (N == 1) return make_class(EType::D, m, model.q);
            unclassifiable(m, N, "p-element with an unexpected fixed-point count");
        }
        if (p == 2 && m == 4) return make_class(EType::D, m, model.q);
        const uint64_t d = m / p;
        if (d > 1 && gcd(d, p) == 1) return make_class(EType::E, m, model.q);
        unclassifiable(m, N, "wild order outside p, 4 and p*d");
    }
    if (N == q * q + 2) {
        if ((q + 1) % m != 0) unclassifiable(m, N, "homology order does not divide q+1");
        return make_class(EType::A, m, model.q);
    }
    if (N == 3) {
        int on = 0;
        for (const auto& es : eigenspaces(model.field, M, model.field))
            for (const auto& v : es.basis) on += on_curve(model, model.field, v) ? 1 : 0;
        if (on == 0) {
            if ((q + 1) % m != 0) unclassifiable(m, N, "B1 order does not divide q+1");
            return make_class(EType::B1, m, model.q);
        }
        if (on == 2) {
            if ((q * q - 1) % m != 0 || (q + 1) % m == 0)
                unclassifiable(m, N, "B2 order must divide q^2-1 but not q+1");
            return make_class(EType::B2, m, model.q);
        }
        unclassifiable(m, N, std::to_string(on) + " vertices on the curve");
    }
    if (N == 0) {
        if ((q * q - q + 1) % m != 0) unclassifiable(m, N, "B3 order does not divide q^2-q+1");
        if (FieldPtr E = model.sextic()) {
            int vertices = 0;
            for (const auto& es : eigenspaces(model.field, M, E))
                for (const auto& v : es.basis) {
                    ++vertices;
                    if (!on_curve(model, E, v)) unclassifiable(m, N, "triangle vertex off the curve");
                }
            if (vertices != 3) unclassifiable(m, N, "triangle over GF(q^6) is degenerate");
        }
        return make_class(EType::B3, m, model.q);
    }
    unclassifiable(m, N, "fixed-point count outside the admissible set");
}

uint64_t tame_oracle(const HermitianModel& model, const Mat3& M) {
    const uint64_t m = proj_order(model, M);
    if (m % model.p == 0) fail("WildElement", "order divisible by the characteristic");
    if (model.q > 9) fail("FieldTooLarge", "tame oracle is limited to q <= 9");
    FieldPtr E = model.sextic();
    if (!E) fail("FieldTooLarge", "GF(q^6) unavailable");
    const Field& K = *E;
    uint64_t count = 0;
    for (const auto& es : eigenspaces(model.field, M, E)) {
        if (es.basis.size() == 1) {
            if (on_curve(model, E, es.basis[0])) ++count;
        } else if (es.basis.size() == 2) {
            // Points u + t v and v; F(u + t v) is a polynomial in t of degree q+1.
            const Vec3& u = es.basis[0];
            const Vec3& v = es.basis[1];
            const Elem buu = form_value(model, E, u, u);
            const Elem buv = form_value(model, E, u, v);
            const Elem bvu = form_value(model, E, v, u);
            const Elem bvv = form_value(model, E, v, v);
            Poly f(model.q + 2, 0);
            f[0] = buu;
            f[1] = K.add(f[1], bvu);
            f[model.q] = K.add(f[model.q], buv);
            f[model.q + 1] = K.add(f[model.q + 1], bvv);
            trim(f);
            if (f.empty()) fail("Unclassifiable", "fixed line contained in the curve");
            count += count_distinct_roots(K, f);
            if (bvv == 0) ++count;
        } else {
            fail("IdentityElement", "the identity has no fixed-point contribution");
        }
    }
    return count;
}

}  // namespace uqg
