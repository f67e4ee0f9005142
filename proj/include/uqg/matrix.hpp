#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "uqg/field.hpp"
#include "uqg/poly.hpp"

namespace uqg {

// Row-major 3x3 matrix and column vectors over one Field.
using Mat3 = std::array<Elem, 9>;
using Vec3 = std::array<Elem, 3>;

struct Mat3Hash {
    size_t operator()(const Mat3& m) const noexcept {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (Elem e : m) {
            h ^= e;
            h *= 0x100000001b3ULL;
        }
        return static_cast<size_t>(h ^ (h >> 29));
    }
};

Mat3 mat_identity();
Mat3 mat_diag(Elem a, Elem b, Elem c);
Mat3 mat_mul(const Field& F, const Mat3& a, const Mat3& b);
Vec3 mat_apply(const Field& F, const Mat3& a, const Vec3& v);
Mat3 mat_transpose(const Mat3& a);
Mat3 mat_frobenius(const Field& F, const Mat3& a, uint32_t j);
Mat3 mat_scale(const Field& F, const Mat3& a, Elem c);
Elem mat_det(const Field& F, const Mat3& a);
Mat3 mat_inverse(const Field& F, const Mat3& a);
Mat3 mat_pow(const Field& F, const Mat3& a, uint64_t e);
Mat3 mat_embed(const FieldPtr& sub, const FieldPtr& sup, const Mat3& a);

/// Scale so the first nonzero entry in row-major order is 1.
Mat3 normalize(const Field& F, const Mat3& a);
Vec3 normalize_point(const Field& F, const Vec3& v);

/// det(xI - a), monic cubic.
Poly charpoly(const Field& F, const Mat3& a);

/// Basis of the kernel of a.
std::vector<Vec3> nullspace(const Field& F, const Mat3& a);

}  // namespace uqg
