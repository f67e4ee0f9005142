#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "uqg/classifier.hpp"
#include "uqg/error.hpp"
#include "uqg/group.hpp"

namespace uqg {

struct TypeTally {
    uint64_t count = 0;
    uint32_t i = 0;
};

/// Riemann-Hurwitz data for H_q -> H_q/G.
struct GenusReport {
    uint32_t q = 0;
    uint64_t order = 0;
    std::array<TypeTally, kETypeCount> census{};
    uint64_t delta = 0;
    uint64_t genus_top = 0;
    int64_t genus = 0;

    std::string to_json() const;
    static GenusReport from_json(const std::string& text);
};

/// Raised when (2g-2 - delta)/|G| does not give an integral genus. The
/// partial report keeps the census.
class NonIntegralGenus : public Error {
public:
    explicit NonIntegralGenus(GenusReport partial);
    const GenusReport& report() const noexcept { return report_; }

private:
    GenusReport report_;
};

/// Solves 2g-2 = |G|(2h-2) + delta for h, throwing NonIntegralGenus.
GenusReport finish_report(GenusReport partial);

/// Classifies one generator per cyclic subgroup and spreads the result over
/// the generators of that subgroup. threads = 0 uses hardware concurrency.
GenusReport quotient_genus(const Group& G, unsigned threads = 0);

/// Genus of H_q / <M> from the types of the powers M^d, d | ord(M).
GenusReport cyclic_genus(const HermitianModel& model, const Mat3& M);

struct SpectrumEntry {
    uint64_t order;
    EType type;
    int64_t genus;

    auto key() const { return std::make_tuple(order, static_cast<int>(type), genus); }
    bool operator<(const SpectrumEntry& o) const { return key() < o.key(); }
    bool operator==(const SpectrumEntry& o) const { return key() == o.key(); }
};

/// Quotient genera of cyclic subgroups <M> with ord(M) <= bound, over a
/// set of representatives covering every type: the two diagonal tori, the
/// Singer group and the unipotent and type-E elements.
std::vector<SpectrumEntry> cyclic_spectrum(uint32_t q, uint64_t bound);

}  // namespace uqg
