#pragma once

#include <cstdint>
#include <vector>

#include "uqg/field.hpp"

namespace uqg {

// Dense univariate polynomial over one Field, coefficients low to high.
// The zero polynomial is the empty vector.
using Poly = std::vector<Elem>;

void trim(Poly& a);
int degree(const Poly& a);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, Elem c);
void poly_divmod(const Field& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_monic(const Field& F, const Poly& a);
Poly poly_gcd(const Field& F, Poly a, Poly b);
Poly poly_powmod(const Field& F, const Poly& base, uint64_t e, const Poly& m);
Elem poly_eval(const Field& F, const Poly& f, Elem x);

/// Copy of f with coefficients mapped from a subfield into sup.
Poly poly_embed(const FieldPtr& sub, const FieldPtr& sup, const Poly& f);

struct Root {
    Elem value;
    uint32_t mult;
};

/// Roots in `target` of f (coefficients in `coeff_field`, deg 1..3), sorted by
/// code, with multiplicities.
std::vector<Root> roots_in(const FieldPtr& coeff_field, const Poly& f, const FieldPtr& target);

/// Distinct roots of f in its own field, for any degree.
std::vector<Elem> distinct_roots(const Field& F, const Poly& f);

/// Number of distinct roots of a nonzero f in its own field.
uint64_t count_distinct_roots(const Field& F, const Poly& f);

}  // namespace uqg
