#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uqg/classifier.hpp"
#include "uqg/genus.hpp"

namespace uqg {

/// One printed row of a genus table.
struct TableEntry {
    int64_t g = 0;
    uint64_t order = 0;
    std::string structure;
    std::vector<std::string> types;
    std::string description;
};

struct Table {
    int number = 0;
    uint32_t q = 0;
    std::vector<TableEntry> rows;
};

/// UQG_FIXTURES when set, otherwise the fixtures directory of the source tree.
std::string default_fixtures_dir();

/// Reads tables.json from the fixtures directory.
std::vector<Table> load_tables(const std::string& dir);
const Table& find_table(const std::vector<Table>& tables, uint32_t q);

/// dir/qNN/rowK.json, K counted from 1 in table order.
std::string row_fixture_path(const std::string& dir, uint32_t q, size_t row);

enum class RowStatus { reproduced, mismatch, unconstructed, erratum_suspected };

std::string status_name(RowStatus s);

struct TableRow {
    uint32_t q = 0;
    size_t index = 0;
    int64_t g_expected = 0;
    uint64_t order_expected = 0;
    std::string structure;
    std::string fixture = "unconstructed";
    RowStatus status = RowStatus::unconstructed;
    std::optional<uint64_t> engine_order;
    std::optional<int64_t> engine_genus;
    std::string note;

    std::string to_json() const;
};

struct TableReport {
    uint32_t q = 0;
    int number = 0;
    std::vector<TableRow> rows;

    /// False when a row with a fixture mismatches outside the registry.
    bool ok() const;
    size_t count(RowStatus s) const;
    std::string to_json() const;
    std::string to_text() const;
};

/// Rebuilds every fixture of the table for q and compares genus and order.
/// Throws NotAPrimePower before any row runs.
TableReport run_table(uint32_t q, const std::string& dir, unsigned threads = 0);

/// A known disagreement between a printed value and the engine.
struct ErratumCheck {
    std::string id;
    std::string subject;
    std::string printed;
    std::string engine;
    bool discrepancy = false;
    std::string note;

    std::string to_json() const;
};

struct RegistryReport {
    std::vector<ErratumCheck> entries;

    std::string to_json() const;
    std::string to_text() const;
};

/// Table rows the registry marks as suspect, as (q, g).
const std::vector<std::pair<uint32_t, int64_t>>& registry_rows();

/// Re-evaluates every registry entry from scratch.
RegistryReport run_registry(const std::string& dir, unsigned threads = 0);

struct ScanReport {
    uint32_t q = 0;
    uint64_t group_order = 0;
    uint64_t expected_order = 0;
    std::array<uint64_t, kETypeCount> counts{};
    std::array<uint64_t, kETypeCount> expected{};
    std::vector<SpectrumEntry> cyclic;
    std::vector<int64_t> unexplained_genera;

    bool classes_ok() const { return counts == expected && group_order == expected_order; }
    bool cyclic_ok() const { return unexplained_genera.empty(); }
    std::string to_json() const;
    std::string to_text() const;
};

/// Classifies every element of PGU(3,q), checks the class sizes and that
/// every cyclic quotient genus is one of the closed-form cyclic values.
ScanReport full_scan(uint32_t q, unsigned threads = 0);

/// Integral values of the cyclic-quotient formulas over all admissible
/// parameters at q.
std::vector<int64_t> cyclic_formula_values(uint32_t q);

}  // namespace uqg
