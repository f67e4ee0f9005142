#include <gtest/gtest.h>

#include <algorithm>

#include "uqg/harness.hpp"

using namespace uqg;

TEST(Harness, TablesLoad) {
    const auto tables = load_tables(default_fixtures_dir());
    ASSERT_EQ(tables.size(), 16u);
    const Table& t = find_table(tables, 5);
    EXPECT_EQ(t.number, 4);
    ASSERT_EQ(t.rows.size(), 6u);
    EXPECT_EQ(t.rows[3].structure, "C_4");
    EXPECT_EQ(t.rows[3].types, std::vector<std::string>{"B2"});
    EXPECT_THROW(find_table(tables, 12), Error);
    EXPECT_THROW(find_table(tables, 31), Error);
}

TEST(Harness, FixturePath) {
    EXPECT_EQ(row_fixture_path("/f", 5, 3), "/f/q05/row3.json");
    EXPECT_EQ(row_fixture_path("/f", 29, 45), "/f/q29/row45.json");
}

TEST(Harness, TableForTwo) {
    const TableReport r = run_table(2, default_fixtures_dir(), 2);
    ASSERT_EQ(r.rows.size(), 2u);
    for (const auto& row : r.rows) EXPECT_EQ(row.status, RowStatus::reproduced) << row.to_json();
    EXPECT_EQ(r.rows[0].engine_genus, 1);
    EXPECT_EQ(r.rows[1].engine_order, 2u);
    EXPECT_TRUE(r.ok());
}

TEST(Harness, TableForFive) {
    const TableReport r = run_table(5, default_fixtures_dir());
    std::vector<int64_t> genera;
    for (const auto& row : r.rows) {
        genera.push_back(row.g_expected);
        if (row.g_expected == 1) EXPECT_EQ(row.status, RowStatus::erratum_suspected);
        else EXPECT_EQ(row.status, RowStatus::reproduced) << row.to_json();
    }
    EXPECT_EQ(genera, (std::vector<int64_t>{10, 4, 3, 2, 1, 0}));
    EXPECT_TRUE(r.ok());
    EXPECT_NE(r.to_text().find("erratum-suspected"), std::string::npos);
}

TEST(Harness, NotAPrimePower) {
    try {
        run_table(12, default_fixtures_dir());
        FAIL() << "expected NotAPrimePower";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotAPrimePower");
    }
}

TEST(Harness, ScanAtTwo) {
    const ScanReport r = full_scan(2, 2);
    EXPECT_EQ(r.group_order, 216u);
    const std::array<uint64_t, kETypeCount> expected{24, 8, 0, 48, 9, 54, 72};
    EXPECT_EQ(r.counts, expected);
    EXPECT_TRUE(r.classes_ok());
    EXPECT_TRUE(r.cyclic_ok());
}

TEST(Harness, ScanClassCounts) {
    const ScanReport r3 = full_scan(3);
    EXPECT_EQ(r3.counts[static_cast<int>(EType::C)], 56u);
    EXPECT_TRUE(r3.classes_ok());
    const ScanReport r4 = full_scan(4);
    EXPECT_EQ(r4.counts[static_cast<int>(EType::A)], 832u);
    EXPECT_EQ(r4.group_order, 62400u);
    EXPECT_TRUE(r4.classes_ok());
    EXPECT_THROW(full_scan(7), Error);
}

TEST(Harness, CyclicFormulaValues) {
    const auto v = cyclic_formula_values(5);
    for (int64_t g : {0, 1, 2, 3, 4}) EXPECT_TRUE(std::binary_search(v.begin(), v.end(), g)) << g;
}

TEST(Harness, Registry) {
    const RegistryReport r = run_registry(default_fixtures_dir());
    auto find = [&](const std::string& id) -> const ErratumCheck& {
        auto it = std::find_if(r.entries.begin(), r.entries.end(), [&](const ErratumCheck& e) { return e.id == id; });
        EXPECT_NE(it, r.entries.end()) << id;
        return *it;
    };
    EXPECT_TRUE(find("alternating-q13").discrepancy);
    EXPECT_NE(find("alternating-q13").engine.find("g=5"), std::string::npos);
    EXPECT_NE(find("alternating-q13").printed.find("27/4"), std::string::npos);
    EXPECT_TRUE(find("subfield-pgu-2-8").discrepancy);
    EXPECT_TRUE(find("q19-g1").discrepancy);
    EXPECT_NE(find("q19-g1").engine.find("|G|=147 g=1"), std::string::npos);
    EXPECT_FALSE(find("q8-c19").discrepancy);
    EXPECT_TRUE(find("mq-order").discrepancy);
    EXPECT_NE(find("mq-order").engine.find("q=3: 96"), std::string::npos);
    EXPECT_NE(r.to_json().find("\"entries\""), std::string::npos);
}
