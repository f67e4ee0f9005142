#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uqg/constructions.hpp"
#include "uqg/genus.hpp"

namespace uqg {

using Census = std::map<uint64_t, uint64_t>;

/// What a found subgroup must match. Empty census and unset fields match
/// anything.
struct SearchTarget {
    uint64_t order = 1;
    Census census;
    std::optional<uint64_t> center;
    std::optional<int64_t> genus;
};

struct SearchHit {
    GeneratorSet set;
    GenusReport report;
    std::string host;
    uint64_t attempt = 0;
};

/// Element-order census of a named small group ("C_4 x C_2", "D_8",
/// "Q_8", "Dic_12", "Sym(3)", "Alt(4)", "SL(2,3)", "SD_16", "M_16",
/// "C_7 : C_3", "C_4 wr C_2") or a direct product of such names.
std::optional<Census> named_census(const std::string& structure);

uint64_t center_size(const Group& G);

bool matches(const Group& G, const SearchTarget& target);

/// One element per cyclic subgroup source: both diagonal tori, the Singer
/// group, Sylow and type-E elements.
std::vector<GeneratorSet> cyclic_candidates(uint32_t q);

/// Random two- and three-generator subgroups of the standard hosts whose
/// order divides the target. Deterministic for a fixed seed; throws
/// NotFound once budget attempts are spent.
SearchHit seeded_search(uint32_t q, const SearchTarget& target, uint64_t seed, uint64_t budget,
                        const std::vector<std::string>& hosts = {});

}  // namespace uqg
