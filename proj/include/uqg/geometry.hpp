#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "uqg/field.hpp"
#include "uqg/matrix.hpp"

namespace uqg {

enum class ModelTag { fermat, norm_trace, m3 };

std::string model_name(ModelTag tag);
ModelTag parse_model(const std::string& name);

/// A plane model of the Hermitian curve over GF(q^2), written as
/// F(P) = P^T gram P^(q).
struct HermitianModel {
    ModelTag tag;
    uint32_t q;
    uint32_t p;
    FieldPtr field;  // GF(q^2)
    Mat3 gram;
    Elem omega = 1;  // m3 only

    static std::shared_ptr<const HermitianModel> make(ModelTag tag, uint32_t q);

    uint32_t genus() const { return q * (q - 1) / 2; }
    /// GF(q^6), or nullptr when the degree cap rules it out.
    FieldPtr sextic() const;
};

using ModelPtr = std::shared_ptr<const HermitianModel>;

/// u^T gram v^(q) evaluated in a field K containing GF(q^2).
Elem form_value(const HermitianModel& model, const FieldPtr& K, const Vec3& u, const Vec3& v);

/// Direct evaluation of the defining polynomial at P with coordinates in K.
bool on_curve(const HermitianModel& model, const FieldPtr& K, const Vec3& P);

/// Every point of PG(2, F) once, normalized.
void for_each_point(const Field& F, const std::function<void(const Vec3&)>& fn);
uint64_t plane_size(const Field& F);

std::vector<Vec3> curve_points(const HermitianModel& model);

struct Eigenspace {
    Elem value;
    std::vector<Vec3> basis;
};

/// Eigenspaces over K of a matrix with entries in F, from the roots of the
/// characteristic polynomial in K.
std::vector<Eigenspace> eigenspaces(const FieldPtr& F, const Mat3& M, const FieldPtr& K);

/// Number of points of PG(2, K) fixed by M, algebraically.
uint64_t fixed_point_count(const FieldPtr& F, const Mat3& M, const FieldPtr& K);

/// Number of fixed points by brute force over PG(2, K).
uint64_t fixed_point_count_scan(const FieldPtr& F, const Mat3& M, const FieldPtr& K);

/// All fixed points of M in PG(2, K), sorted.
std::vector<Vec3> fixed_points(const FieldPtr& F, const Mat3& M, const FieldPtr& K);

}  // namespace uqg
