#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "uqg/geometry.hpp"
#include "uqg/matrix.hpp"

namespace uqg {

constexpr uint64_t kDefaultClosureCap = 1000000;

/// A normalized projective matrix tagged with its model.
struct GroupElem {
    ModelPtr model;
    Mat3 mat;
};

GroupElem make_elem(const ModelPtr& model, const Mat3& mat);

/// The scalar lambda with M^T gram M^(q) = lambda gram, if any.
std::optional<Elem> unitary_scalar(const HermitianModel& model, const Mat3& M);
bool is_unitary(const HermitianModel& model, const Mat3& M);

/// Least n >= 1 with M^n scalar. Throws OrderCapExceeded past cap
/// (default 2p(q^2-1)).
uint64_t proj_order(const HermitianModel& model, const Mat3& M, uint64_t cap = 0);

/// True when M^n is scalar.
bool order_divides(const HermitianModel& model, const Mat3& M, uint64_t n);

/// h^-1 g h, normalized.
Mat3 conjugate(const Field& F, const Mat3& g, const Mat3& h);

class Group {
public:
    Group(ModelPtr model, std::vector<Mat3> gens, std::vector<Mat3> elems);

    const ModelPtr& model() const { return model_; }
    const std::vector<Mat3>& generators() const { return gens_; }
    const std::vector<Mat3>& elements() const { return elems_; }
    uint64_t order() const { return elems_.size(); }
    bool contains(const Mat3& m) const;

private:
    ModelPtr model_;
    std::vector<Mat3> gens_;
    std::vector<Mat3> elems_;
    std::unordered_map<Mat3, uint32_t, Mat3Hash> index_;
};

/// Breadth-first closure in a deterministic order. Throws CapExceeded.
Group closure(const ModelPtr& model, const std::vector<Mat3>& gens, uint64_t cap = kDefaultClosureCap);
Group closure(const std::vector<GroupElem>& gens, uint64_t cap = kDefaultClosureCap);

/// Order of the closure without keeping the elements beyond the cap check.
uint64_t closure_order(const ModelPtr& model, const std::vector<Mat3>& gens, uint64_t cap = kDefaultClosureCap);

/// Element-order statistics: order -> count.
std::map<uint64_t, uint64_t> census(const Group& G);

uint64_t pgu_order(uint64_t q);

}  // namespace uqg
