#include "uqg/group.hpp"

#include <unordered_set>

#include "uqg/error.hpp"

namespace uqg {

GroupElem make_elem(const ModelPtr& model, const Mat3& mat) {
    return {model, normalize(*model->field, mat)};
}

std::optional<Elem> unitary_scalar(const HermitianModel& model, const Mat3& M) {
    const Field& F = *model.field;
    if (mat_det(F, M) == 0) fail("SingularMatrix", "matrix is not invertible");
    Mat3 lhs = mat_mul(F, mat_mul(F, mat_transpose(M), model.gram), mat_frobenius(F, M, F.k() / 2));
    Elem lambda = 0;
    for (int i = 0; i < 9; ++i) {
        if (model.gram[i] == 0) continue;
        lambda = F.div(lhs[i], model.gram[i]);
        break;
    }
    if (lambda == 0) return std::nullopt;
    for (int i = 0; i < 9; ++i)
        if (lhs[i] != F.mul(lambda, model.gram[i])) return std::nullopt;
    return lambda;
}

bool is_unitary(const HermitianModel& model, const Mat3& M) { return unitary_scalar(model, M).has_value(); }

uint64_t proj_order(const HermitianModel& model, const Mat3& M, uint64_t cap) {
    const Field& F = *model.field;
    if (cap == 0) cap = 2ULL * model.p * (uint64_t{model.q} * model.q - 1);
    const Mat3 id = mat_identity();
    const Mat3 g = normalize(F, M);
    Mat3 x = g;
    uint64_t n = 1;
    while (x != id) {
        if (++n > cap) fail("OrderCapExceeded", "projective order exceeds " + std::to_string(cap));
        x = normalize(F, mat_mul(F, x, g));
    }
    return n;
}

bool order_divides(const HermitianModel& model, const Mat3& M, uint64_t n) {
    const Field& F = *model.field;
    return mat_pow(F, normalize(F, M), n) == mat_identity();
}

Mat3 conjugate(const Field& F, const Mat3& g, const Mat3& h) {
    return normalize(F, mat_mul(F, mat_mul(F, mat_inverse(F, h), g), h));
}

Group::Group(ModelPtr model, std::vector<Mat3> gens, std::vector<Mat3> elems)
    : model_(std::move(model)), gens_(std::move(gens)), elems_(std::move(elems)) {
    index_.reserve(elems_.size() * 2);
    for (uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
}

bool Group::contains(const Mat3& m) const { return index_.count(m) != 0; }

namespace {

template <class Visit>
void bfs(const Field& F, const std::vector<Mat3>& gens, uint64_t cap, Visit&& visit) {
    std::unordered_set<Mat3, Mat3Hash> seen;
    std::vector<Mat3> queue{mat_identity()};
    seen.insert(queue[0]);
    visit(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        const Mat3 x = queue[head];
        for (const Mat3& g : gens) {
            Mat3 y = normalize(F, mat_mul(F, x, g));
            if (!seen.insert(y).second) continue;
            if (seen.size() > cap) fail("CapExceeded", "group exceeds " + std::to_string(cap) + " elements");
            queue.push_back(y);
            visit(y);
        }
    }
}

std::vector<Mat3> normalized_gens(const HermitianModel& model, const std::vector<Mat3>& gens) {
    std::vector<Mat3> out;
    for (const Mat3& g : gens) out.push_back(normalize(*model.field, g));
    return out;
}

}  // namespace

Group closure(const ModelPtr& model, const std::vector<Mat3>& gens, uint64_t cap) {
    std::vector<Mat3> ng = normalized_gens(*model, gens);
    std::vector<Mat3> elems;
    bfs(*model->field, ng, cap, [&](const Mat3& m) { elems.push_back(m); });
    return Group(model, ng, std::move(elems));
}

Group closure(const std::vector<GroupElem>& gens, uint64_t cap) {
    if (gens.empty()) fail("MixedContext", "closure needs at least one generator to fix the model");
    const ModelPtr& model = gens[0].model;
    std::vector<Mat3> mats;
    for (const auto& g : gens) {
        if (g.model->tag != model->tag || g.model->q != model->q)
            fail("MixedContext", "generators belong to different models");
        mats.push_back(g.mat);
    }
    return closure(model, mats, cap);
}

uint64_t closure_order(const ModelPtr& model, const std::vector<Mat3>& gens, uint64_t cap) {
    uint64_t n = 0;
    bfs(*model->field, normalized_gens(*model, gens), cap, [&](const Mat3&) { ++n; });
    return n;
}

std::map<uint64_t, uint64_t> census(const Group& G) {
    std::map<uint64_t, uint64_t> out;
    for (const Mat3& m : G.elements()) ++out[proj_order(*G.model(), m)];
    return out;
}

uint64_t pgu_order(uint64_t q) { return (q * q * q + 1) * q * q * q * (q * q - 1); }

}  // namespace uqg
