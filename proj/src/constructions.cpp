#include "uqg/constructions.hpp"

#include <algorithm>
#include <random>

#include "uqg/arith.hpp"
#include "uqg/error.hpp"
#include "uqg/poly.hpp"

namespace uqg {

namespace {

uint32_t log_p(uint32_t p, uint64_t n) {
    uint32_t k = 0;
    while (n > 1) {
        if (n % p) fail("HypothesisViolated", std::to_string(n) + " is not a power of " + std::to_string(p));
        n /= p;
        ++k;
    }
    return k;
}

Elem herm(const Field& F, uint32_t q, const Mat3& H, const Vec3& x, const Vec3& y) {
    Vec3 yq{F.pow(y[0], q), F.pow(y[1], q), F.pow(y[2], q)};
    Vec3 hy = mat_apply(F, H, yq);
    return F.add(F.add(F.mul(x[0], hy[0]), F.mul(x[1], hy[1])), F.mul(x[2], hy[2]));
}

Vec3 axpy(const Field& F, const Vec3& x, Elem t, const Vec3& y) {
    return {F.add(x[0], F.mul(t, y[0])), F.add(x[1], F.mul(t, y[1])), F.add(x[2], F.mul(t, y[2]))};
}

Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
    return {a[0], b[0], c[0], a[1], b[1], c[1], a[2], b[2], c[2]};
}

// Hermitian matrix attached to the model's form.
Mat3 hermitian_gram(const HermitianModel& model) {
    if (model.tag == ModelTag::m3) return mat_scale(*model.field, model.gram, model.omega);
    return model.gram;
}

GeneratorSet make_set(ModelTag tag, uint32_t q, std::vector<Mat3> gens, std::string recipe) {
    auto model = HermitianModel::make(tag, q);
    for (Mat3& g : gens) {
        g = normalize(*model->field, g);
        if (!is_unitary(*model, g)) fail("HypothesisViolated", recipe + ": generator is not unitary");
    }
    return {model, std::move(gens), std::move(recipe)};
}

bool in_gfq(const Field& F, uint32_t q, Elem x) { return F.pow(x, q) == x; }

bool closes_to(const GeneratorSet& g, uint64_t n) {
    try {
        return closure_order(g.model, g.gens, n) == n;
    } catch (const Error&) {
        return false;
    }
}

// Sylow element [[1, w^q, v], [0, 1, w], [0, 0, 1]] with v + v^q = w^(q+1).
Mat3 sylow_element(const Field& F, uint32_t q, Elem w) {
    const Elem target = F.pow(w, q + 1);
    for (Elem v = 0; v < F.size(); ++v)
        if (F.add(v, F.pow(v, q)) == target) return {1, F.pow(w, q), v, 0, 1, w, 0, 0, 1};
    fail("SearchFailed", "no Sylow element with the requested w");
}

std::vector<Elem> trace_zero(const Field& F, uint32_t q) {
    std::vector<Elem> out;
    for (Elem c = 1; c < F.size(); ++c)
        if (F.add(c, F.pow(c, q)) == 0) out.push_back(c);
    return out;
}

Mat3 torus_element(const Field& F, uint32_t q, Elem b) { return mat_diag(F.pow(b, q + 1), b, 1); }

const Mat3 kSwapXZ{0, 0, 1, 0, 1, 0, 1, 0, 0};
const Mat3 kSwapXY{0, 1, 0, 1, 0, 0, 0, 0, 1};
const Mat3 kCycle{0, 1, 0, 0, 0, 1, 1, 0, 0};

std::vector<Mat3> sylow_gens(const Field& F, uint32_t q) {
    std::vector<Mat3> gens;
    const Elem e = F.primitive();
    Elem w = 1;
    for (uint32_t i = 0; i < F.k(); ++i, w = F.mul(w, e)) gens.push_back(sylow_element(F, q, w));
    // Center: v with v + v^q = 0; an F_p-spanning subset suffices.
    auto tz = trace_zero(F, q);
    std::vector<Elem> span{0};
    for (Elem c : tz) {
        if (std::find(span.begin(), span.end(), c) != span.end()) continue;
        gens.push_back({1, 0, c, 0, 1, 0, 0, 0, 1});
        std::vector<Elem> grown;
        for (Elem s : span)
            for (uint32_t t = 0; t < F.p(); ++t) grown.push_back(F.add(s, F.mul(F.from_int(t), c)));
        std::sort(grown.begin(), grown.end());
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        span = std::move(grown);
        if (span.size() == q) break;
    }
    return gens;
}

}  // namespace

Elem element_of_order(const Field& F, uint64_t m) {
    if (m == 0 || (F.size() - 1) % m != 0)
        fail("HypothesisViolated", "no element of order " + std::to_string(m) + " in GF(" + std::to_string(F.size()) + ")");
    return F.pow(F.primitive(), (F.size() - 1) / m);
}

std::vector<Elem> subfield_elements(const Field& F, uint32_t k) {
    if (k == 0 || F.k() % k != 0) fail("NotASubfield", "degree does not divide the field degree");
    const uint64_t sub = ipow(F.p(), k);
    const Elem g = F.pow(F.primitive(), (F.size() - 1) / (sub - 1));
    std::vector<Elem> out{0};
    Elem x = 1;
    for (uint64_t i = 0; i + 1 < sub; ++i, x = F.mul(x, g)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

Mat3 orthonormalize(const Field& F, uint32_t q, const Mat3& H) {
    std::vector<Vec3> rest{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<Vec3> out;
    while (!rest.empty()) {
        Vec3 v{};
        size_t drop = rest.size();
        for (size_t i = 0; i < rest.size() && drop == rest.size(); ++i)
            if (herm(F, q, H, rest[i], rest[i]) != 0) { v = rest[i]; drop = i; }
        for (size_t i = 0; i < rest.size() && drop == rest.size(); ++i)
            for (size_t j = 0; j < rest.size() && drop == rest.size(); ++j) {
                if (i == j) continue;
                for (Elem t = 1; t < F.size(); ++t) {
                    Vec3 w = axpy(F, rest[i], t, rest[j]);
                    if (herm(F, q, H, w, w) != 0) { v = w; drop = i; break; }
                }
            }
        if (drop == rest.size()) fail("SingularMatrix", "Hermitian form is degenerate");
        // Scale so that h(v, v) = 1; h(v, v) lies in GF(q), the image of the norm.
        const Elem n = F.inv(herm(F, q, H, v, v));
        const uint32_t ln = F.log(n);
        if (ln % (q + 1) != 0) fail("SingularMatrix", "form value outside GF(q)");
        const Elem s = F.exp(ln / (q + 1));
        Vec3 u{F.mul(s, v[0]), F.mul(s, v[1]), F.mul(s, v[2])};
        out.push_back(u);
        rest.erase(rest.begin() + static_cast<long>(drop));
        for (Vec3& w : rest) w = axpy(F, w, F.neg(herm(F, q, H, w, u)), u);
    }
    return from_columns(out[0], out[1], out[2]);
}

Mat3 orthonormal_basis(const HermitianModel& model) {
    return orthonormalize(*model.field, model.q, hermitian_gram(model));
}

Mat3 transport(const HermitianModel& from, const HermitianModel& to, const Mat3& M) {
    if (from.q != to.q) fail("MixedContext", "models over different fields");
    const Field& F = *from.field;
    if (from.tag == to.tag) return normalize(F, M);
    const Mat3 sa = orthonormal_basis(from);
    const Mat3 sb = orthonormal_basis(to);
    Mat3 t = mat_mul(F, sb, mat_inverse(F, sa));
    return normalize(F, mat_mul(F, mat_mul(F, t, M), mat_inverse(F, t)));
}

GeneratorSet transport(const GeneratorSet& g, ModelTag to) {
    auto target = HermitianModel::make(to, g.model->q);
    GeneratorSet out{target, {}, g.recipe};
    for (const Mat3& m : g.gens) out.gens.push_back(transport(*g.model, *target, m));
    return out;
}

GeneratorSet pgu_generators(ModelTag tag, uint32_t q) {
    auto nt = HermitianModel::make(ModelTag::norm_trace, q);
    const Field& F = *nt->field;
    std::vector<Mat3> gens{sylow_element(F, q, 1), torus_element(F, q, F.primitive()), kSwapXZ};
    GeneratorSet g = make_set(ModelTag::norm_trace, q, gens, "pgu");
    return tag == ModelTag::norm_trace ? g : transport(g, tag);
}

Mat3 mq_alpha(uint32_t q) {
    auto model = HermitianModel::make(ModelTag::m3, q);
    const Field& F = *model->field;
    const Elem e = F.primitive();
    return {0, F.inv(e), 0, F.neg(F.pow(e, q)), F.add(1, F.pow(e, q - 1)), 0, 0, 0, 1};
}

Mat3 mq_alpha_printed(uint32_t q) {
    auto model = HermitianModel::make(ModelTag::m3, q);
    const Field& F = *model->field;
    const Elem e = F.primitive();
    return {0, F.inv(e), 0, F.neg(F.pow(e, q)), F.add(1, F.pow(e, q + 1)), 0, 0, 0, 1};
}

GeneratorSet sl2_generators(uint32_t q, uint32_t qbar) {
    auto model = HermitianModel::make(ModelTag::m3, q);
    const Field& F = *model->field;
    const uint32_t k = log_p(F.p(), qbar);
    const uint32_t n = log_p(F.p(), q);
    if (k == 0 || n % k != 0) fail("HypothesisViolated", "GF(qbar) is not a subfield of GF(q)");
    const Elem mu = F.pow(F.primitive(), (F.size() - 1) / (qbar - 1));
    std::vector<Mat3> gens{{1, 1, 0, 0, 1, 0, 0, 0, 1}, {1, 0, 0, 1, 1, 0, 0, 0, 1}};
    if (qbar > 3) gens.push_back(mat_diag(mu, F.inv(mu), 1));
    return make_set(ModelTag::m3, q, gens, "sl2(" + std::to_string(qbar) + ")");
}

GeneratorSet mq_generators(uint32_t q) {
    GeneratorSet g = sl2_generators(q, q);
    g.gens.push_back(normalize(*g.model->field, mq_alpha(q)));
    g.recipe = "mq";
    return g;
}

GeneratorSet homology(uint32_t q, uint64_t m) {
    auto model = HermitianModel::make(ModelTag::fermat, q);
    if ((q + 1) % m != 0) fail("HypothesisViolated", "homology order must divide q+1");
    const Elem z = element_of_order(*model->field, m);
    return make_set(ModelTag::fermat, q, {mat_diag(z, 1, 1)}, "homology(" + std::to_string(m) + ")");
}

GeneratorSet elation(uint32_t q) {
    auto model = HermitianModel::make(ModelTag::norm_trace, q);
    const Elem c = trace_zero(*model->field, q).front();
    return make_set(ModelTag::norm_trace, q, {{1, 0, c, 0, 1, 0, 0, 0, 1}}, "elation");
}

GeneratorSet b2_element(uint32_t q, uint64_t m) {
    auto model = HermitianModel::make(ModelTag::norm_trace, q);
    const Field& F = *model->field;
    const Elem b = element_of_order(F, m);
    return make_set(ModelTag::norm_trace, q, {torus_element(F, q, b)}, "torus(" + std::to_string(m) + ")");
}

GeneratorSet e_element(uint32_t q, uint64_t d) {
    auto model = HermitianModel::make(ModelTag::norm_trace, q);
    const Field& F = *model->field;
    if (d < 2 || (q + 1) % d != 0) fail("HypothesisViolated", "d must be a divisor of q+1 above 1");
    const Elem c = trace_zero(F, q).front();
    const Elem a = element_of_order(F, d);
    return make_set(ModelTag::norm_trace, q, {{1, 0, c, 0, a, 0, 0, 0, 1}}, "type-E(" + std::to_string(d) + ")");
}

namespace {

// GF(q^6) realized as GF(q^2)[x]/(f) for a monic irreducible cubic f.
struct CubicExtension {
    const Field& F;
    Poly f;

    Poly mul(const Poly& a, const Poly& b) const { return poly_mod(F, poly_mul(F, a, b), f); }
    Poly pow(const Poly& a, uint64_t e) const { return poly_powmod(F, a, e, f); }
    Vec3 coords(const Poly& a) const {
        Vec3 v{0, 0, 0};
        for (size_t i = 0; i < a.size() && i < 3; ++i) v[i] = a[i];
        return v;
    }
    // Matrix of u -> z u in the basis 1, x, x^2.
    Mat3 mult_matrix(const Poly& z) const {
        Poly basis = {1};
        Vec3 cols[3];
        for (int j = 0; j < 3; ++j) {
            cols[j] = coords(mul(z, basis));
            basis = mul(basis, Poly{0, 1});
        }
        return from_columns(cols[0], cols[1], cols[2]);
    }
};

CubicExtension make_cubic(const Field& F) {
    for (Elem b = 1; b < F.size(); ++b)
        for (Elem a = 0; a < F.size(); ++a) {
            Poly f{b, a, 0, 1};
            bool root = false;
            for (Elem x = 0; x < F.size() && !root; ++x) root = poly_eval(F, f, x) == 0;
            if (!root) return {F, f};
        }
    fail("SearchFailed", "no irreducible cubic");
}

struct SingerData {
    ModelPtr model;
    Mat3 zeta;
    Mat3 frob;
};

SingerData singer_data(uint32_t q) {
    auto model = HermitianModel::make(ModelTag::fermat, q);
    const Field& F = *model->field;
    CubicExtension ext = make_cubic(F);
    const uint64_t q2 = uint64_t{q} * q;
    const uint64_t big = q2 * q2 * q2 - 1;
    const uint64_t s_order = q2 * q + 1;
    const auto primes = prime_factors(s_order);
    Poly zeta;
    std::mt19937_64 rng(q);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(F.size() - 1));
    for (int attempt = 0;; ++attempt) {
        if (attempt > 10000) fail("SearchFailed", "no Singer generator found");
        Poly g{pick(rng), pick(rng), pick(rng)};
        trim(g);
        if (g.empty()) continue;
        Poly z = ext.pow(g, big / s_order);
        bool ok = true;
        for (uint64_t r : primes)
            if (ext.pow(z, s_order / r) == Poly{1}) { ok = false; break; }
        if (ok) { zeta = z; break; }
    }
    const uint64_t q3 = q2 * q;
    auto trace = [&](const Poly& z) {
        Poly t = poly_add(F, poly_add(F, z, ext.pow(z, q2)), ext.pow(z, q2 * q2));
        if (t.size() > 1) fail("SearchFailed", "trace left GF(q^2)");
        return t.empty() ? Elem{0} : t[0];
    };
    Poly basis[3] = {{1}, {0, 1}, {0, 0, 1}};
    Mat3 gram{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gram[3 * i + j] = trace(ext.mul(basis[i], ext.pow(basis[j], q3)));
    Vec3 fc[3];
    for (int j = 0; j < 3; ++j) fc[j] = ext.coords(ext.pow(basis[j], q2));
    const Mat3 frob = from_columns(fc[0], fc[1], fc[2]);
    const Mat3 Z = ext.mult_matrix(zeta);
    const Mat3 S = orthonormalize(F, q, gram);
    const Mat3 Si = mat_inverse(F, S);
    return {model, normalize(F, mat_mul(F, mat_mul(F, Si, Z), S)),
            normalize(F, mat_mul(F, mat_mul(F, Si, frob), S))};
}

}  // namespace

GeneratorSet singer(uint32_t q) {
    SingerData d = singer_data(q);
    return make_set(ModelTag::fermat, q, {d.zeta}, "singer");
}

GeneratorSet singer_normalizer(uint32_t q) {
    SingerData d = singer_data(q);
    return make_set(ModelTag::fermat, q, {d.zeta, d.frob}, "singer-normalizer");
}

GeneratorSet unipotent_semidirect(uint32_t q, uint32_t pk, uint64_t d) {
    auto model = HermitianModel::make(ModelTag::m3, q);
    const Field& F = *model->field;
    const uint32_t k = log_p(F.p(), pk);
    if (k == 0 || log_p(F.p(), q) % k != 0) fail("HypothesisViolated", "p^k must be a subfield order of GF(q)");
    if ((q - 1) % d != 0) fail("HypothesisViolated", "d must divide q-1");
    auto sub = subfield_elements(F, k);
    const Elem mu = F.pow(F.primitive(), (F.size() - 1) / (pk - 1));
    std::vector<Mat3> gens;
    Elem b = 1;
    for (uint32_t i = 0; i < k; ++i, b = F.mul(b, mu)) gens.push_back({1, b, 0, 0, 1, 0, 0, 0, 1});
    if (d > 1) {
        Elem found = 0;
        for (Elem a = 1; a < F.size() && !found; ++a) {
            if (!in_gfq(F, q, a) || F.mult_order(a) != d) continue;
            if (std::binary_search(sub.begin(), sub.end(), F.mul(a, a))) found = a;
        }
        if (!found) fail("HypothesisViolated", "no torus element of order d normalizing E");
        gens.push_back(mat_diag(found, F.inv(found), 1));
    }
    return make_set(ModelTag::m3, q, gens,
                    "unipotent(" + std::to_string(pk) + ")x" + std::to_string(d));
}

GeneratorSet cyclic_by_cyclic_split(uint32_t q, uint64_t d, uint64_t m, bool commuting) {
    auto model = HermitianModel::make(ModelTag::norm_trace, q);
    const Field& F = *model->field;
    if ((q - 1) % d != 0) fail("HypothesisViolated", "d must divide q-1");
    if ((q + 1) % m != 0) fail("HypothesisViolated", "m must divide q+1");
    const Mat3 beta = torus_element(F, q, element_of_order(F, d));
    std::string tag = "split(" + std::to_string(d) + "," + std::to_string(m) + (commuting ? ",c)" : ",n)");
    if (commuting) {
        const Mat3 alpha = mat_diag(1, element_of_order(F, m), 1);
        GeneratorSet g = make_set(ModelTag::norm_trace, q, {beta, alpha}, tag);
        if (!closes_to(g, d * m)) fail("HypothesisViolated", "the complement meets the normal subgroup");
        return g;
    }
    if (m % 2 != 0) fail("HypothesisViolated", "a non-commuting complement needs even m");
    for (Elem A = 1; A < F.size(); ++A) {
        const Elem c = F.div(A, F.pow(A, q));
        if (F.mult_order(c) != m / 2) continue;
        const Mat3 alpha{0, 0, A, 0, 1, 0, F.inv(F.pow(A, q)), 0, 0};
        GeneratorSet g = make_set(ModelTag::norm_trace, q, {beta, alpha}, tag);
        if (closes_to(g, d * m)) return g;
    }
    fail("SearchFailed", "no complement of the requested order");
}

GeneratorSet cyclic_by_cyclic_nonsplit(uint32_t q, uint64_t d, uint64_t m, bool commuting) {
    auto model = HermitianModel::make(ModelTag::fermat, q);
    const Field& F = *model->field;
    if ((q + 1) % d != 0) fail("HypothesisViolated", "d must divide q+1");
    if ((q + 1) % m != 0) fail("HypothesisViolated", "m must divide q+1");
    const Elem lambda = element_of_order(F, d);
    const Mat3 beta = mat_diag(lambda, F.inv(lambda), 1);
    std::string tag = "nonsplit(" + std::to_string(d) + "," + std::to_string(m) + (commuting ? ",c)" : ",n)");
    if (commuting) {
        GeneratorSet g = make_set(ModelTag::fermat, q, {beta, mat_diag(1, element_of_order(F, m), 1)}, tag);
        if (!closes_to(g, d * m)) fail("HypothesisViolated", "the complement meets the normal subgroup");
        return g;
    }
    if (m != 2) fail("HypothesisViolated", "a non-commuting homology complement has order 2");
    return make_set(ModelTag::fermat, q, {beta, kSwapXY}, tag);
}

GeneratorSet dicyclic(uint32_t q, uint64_t n) {
    if (q % 2 == 0) fail("HypothesisViolated", "dicyclic groups need odd q");
    if ((q - 1) % (2 * n) == 0) {
        auto model = HermitianModel::make(ModelTag::m3, q);
        const Field& F = *model->field;
        const Elem mu = element_of_order(F, 2 * n);
        const Elem m1 = F.neg(1);
        return make_set(ModelTag::m3, q, {mat_diag(mu, F.inv(mu), 1), {0, 1, 0, m1, 0, 0, 0, 0, 1}},
                        "dicyclic(" + std::to_string(n) + ")");
    }
    if ((q + 1) % (2 * n) == 0) {
        auto model = HermitianModel::make(ModelTag::fermat, q);
        const Field& F = *model->field;
        const Elem lambda = element_of_order(F, 2 * n);
        const Elem m1 = F.neg(1);
        return make_set(ModelTag::fermat, q, {mat_diag(lambda, F.inv(lambda), 1), {0, 1, 0, m1, 0, 0, 0, 0, 1}},
                        "dicyclic(" + std::to_string(n) + ")");
    }
    fail("HypothesisViolated", "2n must divide q-1 or q+1");
}

GeneratorSet alternating4(uint32_t q) {
    auto model = HermitianModel::make(ModelTag::fermat, q);
    if (model->p == 2) fail("HypothesisViolated", "needs odd characteristic");
    const Elem m1 = model->field->neg(1);
    return make_set(ModelTag::fermat, q, {mat_diag(m1, 1, 1), mat_diag(1, m1, 1), kCycle}, "a4");
}

GeneratorSet symmetric3(uint32_t q) {
    return make_set(ModelTag::fermat, q, {kSwapXY, kCycle}, "s3");
}

GeneratorSet cyclic_by_c3(uint32_t q, uint64_t n) {
    auto model = HermitianModel::make(ModelTag::fermat, q);
    const Field& F = *model->field;
    if ((q + 1) % n != 0) fail("HypothesisViolated", "n must divide q+1");
    const Elem lambda = element_of_order(F, n);
    for (uint64_t i = 2; i < n; ++i) {
        GeneratorSet g = make_set(ModelTag::fermat, q, {mat_diag(lambda, F.pow(lambda, i), 1), kCycle},
                                  "cyclic-by-c3(" + std::to_string(n) + ")");
        if (closes_to(g, 3 * n)) return g;
    }
    fail("SearchFailed", "no exponent gives a group of order 3n");
}

GeneratorSet subfield_pgu(uint32_t qbar, uint32_t q) {
    GeneratorSet small = pgu_generators(ModelTag::fermat, qbar);
    auto model = HermitianModel::make(ModelTag::fermat, q);
    std::vector<Mat3> gens;
    for (const Mat3& m : small.gens) gens.push_back(mat_embed(small.model->field, model->field, m));
    return make_set(ModelTag::fermat, q, gens, "pgu(" + std::to_string(qbar) + ")");
}

GeneratorSet dihedral(uint32_t q, uint64_t n) {
    auto model = HermitianModel::make(ModelTag::fermat, q);
    const Field& F = *model->field;
    const Elem lambda = element_of_order(F, n);
    if ((q + 1) % n != 0) fail("HypothesisViolated", "n must divide q+1");
    return make_set(ModelTag::fermat, q, {mat_diag(lambda, F.inv(lambda), 1), kSwapXY},
                    "dihedral(" + std::to_string(n) + ")");
}

std::vector<std::string> host_names() {
    return {"monomial", "b2_norm", "singer_norm", "sylow", "e_host", "borel", "sl2", "mq", "pgu"};
}

uint64_t host_order(const std::string& name, uint32_t q) {
    const uint64_t Q = q;
    if (name == "monomial") return 6 * (Q + 1) * (Q + 1);
    if (name == "b2_norm") return 2 * (Q * Q - 1);
    if (name == "singer_norm") return 3 * (Q * Q - Q + 1);
    if (name == "sylow") return Q * Q * Q;
    if (name == "e_host") return Q * (Q + 1);
    if (name == "borel") return Q * Q * Q * (Q * Q - 1);
    if (name == "sl2") return Q * (Q * Q - 1);
    if (name == "mq") return Q * (Q * Q - 1) * (Q + 1);
    if (name == "pgu") return pgu_order(Q);
    return 0;
}

GeneratorSet host(const std::string& name, uint32_t q) {
    if (name == "monomial") {
        auto model = HermitianModel::make(ModelTag::fermat, q);
        const Elem z = element_of_order(*model->field, q + 1);
        return make_set(ModelTag::fermat, q, {mat_diag(z, 1, 1), mat_diag(1, z, 1), kSwapXY, kCycle}, name);
    }
    if (name == "b2_norm") {
        auto model = HermitianModel::make(ModelTag::norm_trace, q);
        const Field& F = *model->field;
        return make_set(ModelTag::norm_trace, q, {torus_element(F, q, F.primitive()), kSwapXZ}, name);
    }
    if (name == "singer_norm") {
        GeneratorSet g = singer_normalizer(q);
        g.recipe = name;
        return g;
    }
    if (name == "sylow" || name == "borel") {
        auto model = HermitianModel::make(ModelTag::norm_trace, q);
        const Field& F = *model->field;
        std::vector<Mat3> gens = sylow_gens(F, q);
        if (name == "borel") gens.push_back(torus_element(F, q, F.primitive()));
        return make_set(ModelTag::norm_trace, q, gens, name);
    }
    if (name == "e_host") {
        auto model = HermitianModel::make(ModelTag::norm_trace, q);
        const Field& F = *model->field;
        std::vector<Mat3> gens;
        for (const Mat3& g : sylow_gens(F, q))
            if (g[1] == 0 && g[5] == 0) gens.push_back(g);
        gens.push_back(mat_diag(1, element_of_order(F, q + 1), 1));
        return make_set(ModelTag::norm_trace, q, gens, name);
    }
    if (name == "sl2") {
        GeneratorSet g = sl2_generators(q, q);
        g.recipe = name;
        return g;
    }
    if (name == "mq") {
        GeneratorSet g = mq_generators(q);
        g.recipe = name;
        return g;
    }
    if (name == "pgu") return pgu_generators(ModelTag::norm_trace, q);
    fail("UnknownHost", "unknown host '" + name + "'");
}

}  // namespace uqg
