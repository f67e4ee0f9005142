#include <gtest/gtest.h>

#include <filesystem>

#include "uqg/io.hpp"
#include "uqg/search.hpp"

using namespace uqg;

TEST(GeneratorFile, RoundTrip) {
    GeneratorFile file;
    file.set = b2_element(5, 4);
    file.structure = "C_4";
    file.order = 4;
    const std::string text = to_json(file);
    const GeneratorFile back = generator_file_from_json(text);
    EXPECT_EQ(back.set.model->q, 5u);
    EXPECT_EQ(back.set.gens, file.set.gens);
    EXPECT_EQ(to_json(back), text);

    const auto path = (std::filesystem::temp_directory_path() / "uqg_io_test" / "c4.json").string();
    write_generator_file(path, file);
    EXPECT_EQ(to_json(read_generator_file(path)), text);
    std::filesystem::remove_all(std::filesystem::path(path).parent_path());
}

TEST(GeneratorFile, RejectsNonUnitary) {
    const std::string text = R"({"q":5,"model":"fermat","generators":[[[1,1,0],[0,1,0],[0,0,1]]]})";
    try {
        generator_file_from_json(text);
        FAIL() << "expected NotUnitary";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotUnitary");
    }
}

TEST(ParseMatrix, AcceptsUnicodeMinus) {
    auto model = HermitianModel::make(ModelTag::fermat, 5);
    const Field& F = *model->field;
    const Mat3 a = parse_matrix(F, "[[\xE2\x88\x92" "1,0,0],[0,1,0],[0,0,1]]");
    const Mat3 b = parse_matrix(F, "[[-1,0,0],[0,1,0],[0,0,1]]");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a[0], F.neg(1));
    EXPECT_THROW(parse_matrix(F, "[[1,0],[0,1]]"), Error);
    EXPECT_EQ(parse_element(F, "[0,1]"), F.from_coeffs({0, 1}));
}

TEST(NamedCensus, SmallGroups) {
    EXPECT_EQ(*named_census("Q_8"), (Census{{1, 1}, {2, 1}, {4, 6}}));
    EXPECT_EQ(*named_census("D_8"), (Census{{1, 1}, {2, 5}, {4, 2}}));
    EXPECT_EQ(*named_census("C_4 x C_2"), (Census{{1, 1}, {2, 3}, {4, 4}}));
    EXPECT_EQ(*named_census("Dic_12"), (Census{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}));
    EXPECT_EQ(*named_census("C_7 : C_3"), (Census{{1, 1}, {3, 14}, {7, 6}}));
    EXPECT_EQ(*named_census("C_3 x C_3 : C_2"), (Census{{1, 1}, {2, 9}, {3, 8}}));
    EXPECT_EQ(*named_census("Sym(3) x C_3"), (Census{{1, 1}, {2, 3}, {3, 8}, {6, 6}}));
    EXPECT_EQ(*named_census("SG(32, 11)"), *named_census("C_4 wr C_2"));
    EXPECT_FALSE(named_census("C_49 : C_3"));
    EXPECT_FALSE(named_census("D_7"));
}

TEST(Search, QuaternionAtEleven) {
    SearchTarget target{8, *named_census("Q_8"), std::nullopt, 7};
    const SearchHit hit = seeded_search(11, target, 1, 4000);
    EXPECT_EQ(hit.report.order, 8u);
    EXPECT_EQ(hit.report.genus, 7);
    const SearchHit again = seeded_search(11, target, 1, 4000);
    EXPECT_EQ(again.attempt, hit.attempt);
    EXPECT_EQ(again.set.gens, hit.set.gens);
}

TEST(Search, ExhaustedBudget) {
    try {
        seeded_search(5, {3, {}, std::nullopt, 1}, 1, 200);
        FAIL() << "expected NotFound";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotFound");
    }
}

TEST(Search, CyclicCandidatesAreUnitary) {
    for (uint32_t q : {4u, 7u}) {
        const auto cands = cyclic_candidates(q);
        EXPECT_GT(cands.size(), 10u);
        for (const auto& c : cands) EXPECT_TRUE(is_unitary(*c.model, c.gens[0]));
    }
}
