#include "uqg/geometry.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "uqg/arith.hpp"
#include "uqg/error.hpp"

namespace uqg {

namespace {
constexpr uint64_t kScanFieldLimit = 4096;
constexpr uint64_t kEnumFieldLimit = 1000000;

bool proportional(const Field& F, const Vec3& a, const Vec3& b) {
    return F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0])) == 0 &&
           F.sub(F.mul(a[0], b[2]), F.mul(a[2], b[0])) == 0 &&
           F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])) == 0;
}
}  // namespace

std::string model_name(ModelTag tag) {
    switch (tag) {
        case ModelTag::fermat: return "fermat";
        case ModelTag::norm_trace: return "norm_trace";
        case ModelTag::m3: return "m3";
    }
    return "?";
}

ModelTag parse_model(const std::string& name) {
    if (name == "fermat") return ModelTag::fermat;
    if (name == "norm_trace") return ModelTag::norm_trace;
    if (name == "m3") return ModelTag::m3;
    fail("UnknownModel", "unknown model '" + name + "'");
}

std::shared_ptr<const HermitianModel> HermitianModel::make(ModelTag tag, uint32_t q) {
    static std::mutex mu;
    static std::map<std::pair<int, uint32_t>, std::shared_ptr<const HermitianModel>> cache;
    auto pp = prime_power(q);
    if (!pp) fail("NotAPrimePower", std::to_string(q) + " is not a prime power");
    std::lock_guard lock(mu);
    auto key = std::make_pair(static_cast<int>(tag), q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto m = std::make_shared<HermitianModel>();
    m->tag = tag;
    m->q = q;
    m->p = pp->first;
    m->field = Field::make(pp->first, 2 * pp->second);
    const Field& F = *m->field;
    const Elem minus_one = F.neg(1);
    switch (tag) {
        case ModelTag::fermat:
            m->gram = mat_identity();
            break;
        case ModelTag::norm_trace:
            m->gram = {0, 0, 1, 0, minus_one, 0, 1, 0, 0};
            break;
        case ModelTag::m3: {
            Elem w = 0;
            for (Elem c = 1; c < F.size(); ++c)
                if (F.pow(c, q - 1) == minus_one) { w = c; break; }
            if (w == 0) fail("SearchFailed", "no omega with omega^(q-1) = -1");
            m->omega = w;
            m->gram = {0, 1, 0, minus_one, 0, 0, 0, 0, w};
            break;
        }
    }
    cache.emplace(key, m);
    return m;
}

FieldPtr HermitianModel::sextic() const {
    const uint32_t k = 3 * field->k();
    try {
        return Field::make(p, k);
    } catch (const Error& e) {
        if (e.kind() == "DegreeOutOfRange") return nullptr;
        throw;
    }
}

Elem form_value(const HermitianModel& model, const FieldPtr& K, const Vec3& u, const Vec3& v) {
    const Field& E = *K;
    Mat3 g = mat_embed(model.field, K, model.gram);
    Vec3 vq{E.pow(v[0], model.q), E.pow(v[1], model.q), E.pow(v[2], model.q)};
    Vec3 gv = mat_apply(E, g, vq);
    return E.add(E.add(E.mul(u[0], gv[0]), E.mul(u[1], gv[1])), E.mul(u[2], gv[2]));
}

bool on_curve(const HermitianModel& model, const FieldPtr& K, const Vec3& P) {
    if (K->p() != model.p || K->k() % model.field->k() != 0)
        fail("FieldMismatch", "point field does not contain GF(q^2)");
    const Field& E = *K;
    const uint32_t q = model.q;
    auto pq = [&](Elem x) { return E.pow(x, q); };
    const Elem x = P[0], y = P[1], z = P[2];
    Elem val = 0;
    switch (model.tag) {
        case ModelTag::fermat:
            val = E.add(E.add(E.mul(x, pq(x)), E.mul(y, pq(y))), E.mul(z, pq(z)));
            break;
        case ModelTag::norm_trace:
            val = E.sub(E.add(E.mul(pq(x), z), E.mul(x, pq(z))), E.mul(y, pq(y)));
            break;
        case ModelTag::m3: {
            const Elem w = Embedding::get(model.field, K)->map(model.omega);
            val = E.add(E.sub(E.mul(x, pq(y)), E.mul(y, pq(x))), E.mul(w, E.mul(z, pq(z))));
            break;
        }
    }
    return val == 0;
}

uint64_t plane_size(const Field& F) { return F.size() * F.size() + F.size() + 1; }

void for_each_point(const Field& F, const std::function<void(const Vec3&)>& fn) {
    if (F.size() > kEnumFieldLimit) fail("FieldTooLarge", "plane scan over a field this large");
    const Elem n = static_cast<Elem>(F.size());
    for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) fn({1, y, z});
    for (Elem z = 0; z < n; ++z) fn({0, 1, z});
    fn({0, 0, 1});
}

std::vector<Vec3> curve_points(const HermitianModel& model) {
    std::vector<Vec3> out;
    for_each_point(*model.field, [&](const Vec3& P) {
        if (on_curve(model, model.field, P)) out.push_back(P);
    });
    return out;
}

std::vector<Eigenspace> eigenspaces(const FieldPtr& F, const Mat3& M, const FieldPtr& K) {
    const Field& E = *K;
    Mat3 MK = mat_embed(F, K, M);
    std::vector<Eigenspace> out;
    for (const Root& r : roots_in(F, charpoly(*F, M), K)) {
        Mat3 shifted = MK;
        for (int i = 0; i < 3; ++i) shifted[4 * i] = E.sub(shifted[4 * i], r.value);
        Eigenspace es{r.value, nullspace(E, shifted)};
        for (auto& v : es.basis) v = normalize_point(E, v);
        out.push_back(std::move(es));
    }
    return out;
}

uint64_t fixed_point_count(const FieldPtr& F, const Mat3& M, const FieldPtr& K) {
    const uint64_t n = K->size();
    uint64_t total = 0;
    for (const auto& es : eigenspaces(F, M, K)) {
        switch (es.basis.size()) {
            case 1: total += 1; break;
            case 2: total += n + 1; break;
            case 3: total += n * n + n + 1; break;
            default: break;
        }
    }
    return total;
}

uint64_t fixed_point_count_scan(const FieldPtr& F, const Mat3& M, const FieldPtr& K) {
    if (K->size() > kScanFieldLimit) fail("FieldTooLarge", "fixed-point scan over a field this large");
    const Field& E = *K;
    Mat3 MK = mat_embed(F, K, M);
    uint64_t count = 0;
    for_each_point(E, [&](const Vec3& P) {
        if (proportional(E, mat_apply(E, MK, P), P)) ++count;
    });
    return count;
}

std::vector<Vec3> fixed_points(const FieldPtr& F, const Mat3& M, const FieldPtr& K) {
    const Field& E = *K;
    std::vector<Vec3> out;
    for (const auto& es : eigenspaces(F, M, K)) {
        if (es.basis.size() == 1) {
            out.push_back(es.basis[0]);
        } else if (es.basis.size() == 2) {
            if (E.size() > kEnumFieldLimit) fail("FieldTooLarge", "fixed line over a field this large");
            const Vec3& u = es.basis[0];
            const Vec3& v = es.basis[1];
            for (Elem t = 0; t < E.size(); ++t) {
                Vec3 w{E.add(u[0], E.mul(t, v[0])), E.add(u[1], E.mul(t, v[1])), E.add(u[2], E.mul(t, v[2]))};
                out.push_back(normalize_point(E, w));
            }
            out.push_back(v);
        } else if (es.basis.size() == 3) {
            for_each_point(E, [&](const Vec3& P) { out.push_back(P); });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace uqg
