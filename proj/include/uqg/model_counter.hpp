#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqg/field.hpp"

namespace uqg {

constexpr uint64_t kCountFieldCap = 1000000;

struct PointCount {
    uint64_t points = 0;  // affine points plus the place at infinity
    int64_t genus = 0;    // genus of the quotient it models
    bool maximal = false;

    std::string to_json() const;
};

/// Every lambda in GF(q^2) with lambda^((q-1)/(p-1)) = -1. In GF(p) this
/// is lambda^h = -1.
std::vector<Elem> valid_lambdas(uint32_t q);

/// y^((q+1)/d) = L(x) over GF(q^2), where L(x^p - lambda x) = x^q + x. For
/// lambda in GF(p), L(x) = sum_{i=1..h} lambda^(i-1) x^(q/p^i). With no
/// lambda the first valid one is used. Throws LambdaInvalid, FieldTooLarge.
PointCount count_tipoE(uint32_t q, uint64_t d, std::optional<Elem> lambda = std::nullopt, unsigned threads = 0);

/// The plane models of cyclic quotients, cases 1, 2 and 5. Case 5 reads
/// params["d"].
PointCount count_named_model(int which, uint32_t q, const std::map<std::string, int64_t>& params = {},
                             unsigned threads = 0);

}  // namespace uqg
