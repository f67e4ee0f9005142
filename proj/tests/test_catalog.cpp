#include <gtest/gtest.h>

#include "uqg/catalog.hpp"

using namespace uqg;

namespace {

Rational value(FormulaId id, const Params& p) { return eval_formula(id, p).value; }

Crosscheck check(FormulaId id, const Params& p) {
    auto gens = formula_recipe(id, p);
    EXPECT_TRUE(gens.has_value());
    return crosscheck(id, p, *gens);
}

}  // namespace

TEST(Catalog, NamesRoundTrip) {
    for (FormulaId id : all_formulas()) EXPECT_EQ(parse_formula(formula_name(id)), id);
    EXPECT_THROW(parse_formula("P9_9"), Error);
}

TEST(Catalog, UnipotentSemidirect) {
    EXPECT_EQ(value(FormulaId::P4_1, {{"q", 9}, {"pk", 3}, {"d", 1}}), 9);
    EXPECT_EQ(value(FormulaId::P4_1, {{"q", 8}, {"pk", 2}, {"d", 1}}), 12);
    EXPECT_TRUE(check(FormulaId::P4_1, {{"q", 9}, {"pk", 3}, {"d", 1}}).match);
    EXPECT_TRUE(check(FormulaId::P4_1, {{"q", 8}, {"pk", 2}, {"d", 1}}).match);
}

TEST(Catalog, SplitCyclicBranch) {
    Evaluation e = eval_formula(FormulaId::P4_5, {{"q", 9}, {"d", 1}, {"m", 2}, {"commuting", 1}});
    EXPECT_EQ(e.value, 16);
    EXPECT_EQ(e.branch, "B1");
}

TEST(Catalog, CyclicByC3) {
    EXPECT_EQ(value(FormulaId::P5_2, {{"q", 13}, {"n", 7}}), 4);
    EXPECT_TRUE(check(FormulaId::P5_2, {{"q", 13}, {"n", 7}}).match);
}

TEST(Catalog, SubfieldSl2) {
    EXPECT_EQ(value(FormulaId::P4_3, {{"q", 9}, {"qbar", 3}}), 0);
    EXPECT_TRUE(check(FormulaId::P4_3, {{"q", 9}, {"qbar", 3}}).match);
}

TEST(Catalog, AlternatingMismatch) {
    Crosscheck c = check(FormulaId::P5_3, {{"q", 13}});
    EXPECT_EQ(c.formula.value, Rational(27, 4));
    EXPECT_FALSE(c.formula.integral());
    EXPECT_EQ(c.engine.genus, 5);
    EXPECT_FALSE(c.match);
}

TEST(Catalog, SubfieldPguMismatch) {
    Crosscheck c = check(FormulaId::P5_1, {{"q", 8}, {"qbar", 2}});
    EXPECT_EQ(c.formula.value, Rational(-1, 3));
    EXPECT_EQ(c.engine.genus, 0);
    EXPECT_EQ(c.engine.delta, 486u);
    EXPECT_FALSE(c.match);
}

TEST(Catalog, HypothesisTrace) {
    try {
        eval_formula(FormulaId::P5_2, {{"q", 13}, {"n", 2}});
        FAIL() << "expected HypothesisViolated";
    } catch (const HypothesisViolated& e) {
        ASSERT_FALSE(e.trace().empty());
        EXPECT_EQ(e.trace().back().name, "n != 2");
        EXPECT_FALSE(e.trace().back().ok);
    }
    EXPECT_THROW(eval_formula(FormulaId::P4_1, {{"q", 12}, {"pk", 2}, {"d", 1}}), HypothesisViolated);
    EXPECT_THROW(eval_formula(FormulaId::P4_1, {{"q", 9}}), HypothesisViolated);
}

TEST(Catalog, SymmetricBranchesEmptyInCharThree) {
    EXPECT_THROW(eval_formula(FormulaId::P5_4, {{"q", 9}}), HypothesisViolated);
    EXPECT_THROW(eval_formula(FormulaId::P5_4, {{"q", 5}}), HypothesisViolated);
}

TEST(Catalog, EvaluationJson) {
    Evaluation e = eval_formula(FormulaId::P5_3, {{"q", 5}});
    EXPECT_EQ(e.value_string(), "7/4");
    EXPECT_NE(e.to_json().find("\"value\":\"7/4\""), std::string::npos);
}

TEST(Catalog, RemarkCases) {
    EXPECT_EQ(value(FormulaId::R5_6, {{"q", 4}, {"case", 1}}), 2);
    EXPECT_EQ(value(FormulaId::R5_6, {{"q", 9}, {"case", 2}}), 12);
    EXPECT_EQ(value(FormulaId::R5_6, {{"q", 8}, {"case", 3}, {"d", 3}}), 3);
    EXPECT_EQ(value(FormulaId::R5_6, {{"q", 4}, {"case", 5}, {"d", 15}}), 0);
    for (auto [q, c, d] : std::vector<std::tuple<int, int, int>>{{4, 1, 0}, {9, 2, 0}, {8, 3, 3}, {7, 4, 43}, {5, 5, 8}, {8, 7, 0}}) {
        Params p{{"q", q}, {"case", c}};
        if (d) p["d"] = d;
        EXPECT_TRUE(check(FormulaId::R5_6, p).match) << q << " case " << c;
    }
}
