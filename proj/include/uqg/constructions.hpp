#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uqg/geometry.hpp"
#include "uqg/group.hpp"

namespace uqg {

/// Generators of a subgroup of PGU(3,q) on one model, with a short note on
/// how they were produced.
struct GeneratorSet {
    ModelPtr model;
    std::vector<Mat3> gens;
    std::string recipe;
};

// Field helpers inside GF(q^2).
Elem element_of_order(const Field& F, uint64_t m);
/// Elements x of GF(q^2) with x^(p^k) = x.
std::vector<Elem> subfield_elements(const Field& F, uint32_t k);

/// Columns form a basis in which the model's Hermitian form is the identity.
Mat3 orthonormal_basis(const HermitianModel& model);
/// Orthonormal basis for the Hermitian form x^T H y^(q) over F.
Mat3 orthonormalize(const Field& F, uint32_t q, const Mat3& H);
/// The same projectivity written in another model.
Mat3 transport(const HermitianModel& from, const HermitianModel& to, const Mat3& M);
GeneratorSet transport(const GeneratorSet& g, ModelTag to);

GeneratorSet pgu_generators(ModelTag tag, uint32_t q);

// M_q on the m3 model: SL(2,q) plus the complement generator.
/// Homology [[0, e^-1, 0], [-e^q, 1 + e^(q-1), 0], [0, 0, 1]] of order q+1.
Mat3 mq_alpha(uint32_t q);
/// The same shape with 1 + e^(q+1) in the middle; not unitary.
Mat3 mq_alpha_printed(uint32_t q);
GeneratorSet sl2_generators(uint32_t q, uint32_t qbar);
GeneratorSet mq_generators(uint32_t q);

GeneratorSet homology(uint32_t q, uint64_t m);
GeneratorSet elation(uint32_t q);
GeneratorSet b2_element(uint32_t q, uint64_t m);
GeneratorSet e_element(uint32_t q, uint64_t d);
GeneratorSet singer(uint32_t q);
GeneratorSet singer_normalizer(uint32_t q);

// Families with closed-form genera.
GeneratorSet unipotent_semidirect(uint32_t q, uint32_t pk, uint64_t d);
GeneratorSet cyclic_by_cyclic_split(uint32_t q, uint64_t d, uint64_t m, bool commuting);
GeneratorSet cyclic_by_cyclic_nonsplit(uint32_t q, uint64_t d, uint64_t m, bool commuting);
GeneratorSet dicyclic(uint32_t q, uint64_t n);
GeneratorSet alternating4(uint32_t q);
GeneratorSet symmetric3(uint32_t q);
GeneratorSet cyclic_by_c3(uint32_t q, uint64_t n);
GeneratorSet subfield_pgu(uint32_t qbar, uint32_t q);
GeneratorSet dihedral(uint32_t q, uint64_t n);

/// Large subgroups used as search spaces.
std::vector<std::string> host_names();
GeneratorSet host(const std::string& name, uint32_t q);
/// Expected order of a host, 0 if unknown.
uint64_t host_order(const std::string& name, uint32_t q);

}  // namespace uqg
