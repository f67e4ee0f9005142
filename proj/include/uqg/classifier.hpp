#pragma once

#include <cstdint>
#include <string>

#include "uqg/geometry.hpp"
#include "uqg/matrix.hpp"

namespace uqg {

enum class EType { A, B1, B2, B3, C, D, E };

constexpr int kETypeCount = 7;

std::string etype_name(EType t);
EType parse_etype(const std::string& name);

/// Contribution i(sigma) of a nontrivial element of the given type.
uint32_t contribution(EType t, uint32_t q);

struct ElementClass {
    EType type;
    uint64_t order;
    uint32_t i;
};

/// Geometric type of a nontrivial element of PGU(3,q). Throws
/// IdentityElement or Unclassifiable.
ElementClass classify(const HermitianModel& model, const Mat3& M);

/// Fixed points of a tame element on the curve over GF(q^6).
uint64_t tame_oracle(const HermitianModel& model, const Mat3& M);

}  // namespace uqg
