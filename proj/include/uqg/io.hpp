#pragma once

#include <cstdint>
#include <string>

#include "uqg/constructions.hpp"
#include "uqg/error.hpp"

namespace uqg {

/// Generator file: q, model, generators as 3x3 arrays of coefficient
/// vectors, plus optional recipe, structure, order and provenance fields.
struct GeneratorFile {
    GeneratorSet set;
    std::string structure;
    uint64_t order = 0;
    std::string provenance_json = "{}";
};

std::string to_json(const GeneratorFile& file);
GeneratorFile generator_file_from_json(const std::string& text);

GeneratorFile read_generator_file(const std::string& path);
void write_generator_file(const std::string& path, const GeneratorFile& file);

/// Matrix literal such as "[[-1,0,0],[0,1,0],[0,0,1]]". An entry is an
/// integer reduced mod p or a coefficient vector.
Mat3 parse_matrix(const Field& F, const std::string& text);

/// A field element written as an integer or a coefficient vector "[c0,c1,...]".
Elem parse_element(const Field& F, const std::string& text);

std::string read_text(const std::string& path);

}  // namespace uqg
