#include <gtest/gtest.h>

#include <algorithm>

#include "uqg/constructions.hpp"
#include "uqg/genus.hpp"

using namespace uqg;

namespace {

GenusReport genus_of(const GeneratorSet& g) { return quotient_genus(closure(g.model, g.gens), 2); }

bool has(const std::vector<SpectrumEntry>& s, uint64_t order, EType t, int64_t g) {
    return std::find(s.begin(), s.end(), SpectrumEntry{order, t, g}) != s.end();
}

}  // namespace

TEST(Genus, ElationAtTwo) {
    GenusReport r = genus_of(elation(2));
    EXPECT_EQ(r.order, 2u);
    EXPECT_EQ(r.delta, 4u);
    EXPECT_EQ(r.genus, 0);
}

TEST(Genus, TrivialGroup) {
    auto model = HermitianModel::make(ModelTag::fermat, 7);
    GenusReport r = quotient_genus(closure(model, {mat_identity()}));
    EXPECT_EQ(r.genus, 21);
    EXPECT_EQ(r.delta, 0u);
}

TEST(Genus, CyclicB2AtFive) {
    GenusReport r = genus_of(b2_element(5, 4));
    EXPECT_EQ(r.census[static_cast<int>(EType::B2)].count, 2u);
    EXPECT_EQ(r.census[static_cast<int>(EType::A)].count, 1u);
    EXPECT_EQ(r.delta, 10u);
    EXPECT_EQ(r.genus, 2);
    EXPECT_EQ(r.to_json(), R"({"q":5,"order":4,"census":{"A":[1,6],"B2":[2,2]},"delta":10,"genus_top":10,"genus":2})");
    EXPECT_EQ(GenusReport::from_json(r.to_json()).to_json(), r.to_json());
}

TEST(Genus, AlternatingAtThirteen) {
    GenusReport r = genus_of(alternating4(13));
    EXPECT_EQ(r.order, 12u);
    EXPECT_EQ(r.delta, 58u);
    EXPECT_EQ(r.genus, 5);
}

TEST(Genus, CyclicMatchesClosure) {
    GeneratorSet s = singer(5);
    EXPECT_EQ(cyclic_genus(*s.model, s.gens[0]).genus, genus_of(s).genus);
    GeneratorSet e = e_element(8, 3);
    EXPECT_EQ(cyclic_genus(*e.model, e.gens[0]).genus, genus_of(e).genus);
}

TEST(Genus, NonIntegralCarriesCensus) {
    GenusReport r;
    r.q = 5;
    r.order = 4;
    r.census[static_cast<int>(EType::A)] = {1, 6};
    try {
        finish_report(r);
        FAIL() << "expected NonIntegralGenus";
    } catch (const NonIntegralGenus& e) {
        EXPECT_EQ(e.kind(), "NonIntegralGenus");
        EXPECT_EQ(e.report().census[0].count, 1u);
    }
}

TEST(Genus, Sl2InM9) {
    GenusReport r = genus_of(sl2_generators(9, 3));
    EXPECT_EQ(r.order, 24u);
    EXPECT_EQ(r.delta, 118u);
    EXPECT_EQ(r.genus, 0);
}

TEST(Genus, CyclicSpectrum) {
    auto s5 = cyclic_spectrum(5, 1000);
    EXPECT_TRUE(has(s5, 3, EType::B3, 3));
    EXPECT_TRUE(has(s5, 2, EType::A, 4));
    auto s8 = cyclic_spectrum(8, 1000);
    EXPECT_TRUE(has(s8, 7, EType::B2, 4));
}
