#include "uqg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "uqg/arith.hpp"
#include "uqg/catalog.hpp"
#include "uqg/constructions.hpp"
#include "uqg/io.hpp"
#include "uqg/search.hpp"

namespace uqg {

using ojson = nlohmann::ordered_json;

namespace {

unsigned worker_count(unsigned threads, size_t jobs) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::max<size_t>(1, std::min<size_t>(threads, jobs)));
}

// Runs job(i) for i < n on a small pool; exceptions are left to the job.
void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& job) {
    const unsigned workers = worker_count(threads, n);
    std::atomic<size_t> next{0};
    auto loop = [&]() {
        for (size_t i = next++; i < n; i = next++) job(i);
    };
    if (workers == 1) {
        loop();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(loop);
    for (auto& th : pool) th.join();
}

void require_prime_power(uint32_t q) {
    if (!prime_power(q)) fail("NotAPrimePower", std::to_string(q) + " is not a prime power");
}

std::string pad2(uint32_t q) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "q%02u", q);
    return buf;
}

}  // namespace

std::string default_fixtures_dir() {
    if (const char* env = std::getenv("UQG_FIXTURES"); env && *env) return env;
    return std::string(UQG_SOURCE_DIR) + "/fixtures";
}

std::vector<Table> load_tables(const std::string& dir) {
    const auto j = nlohmann::json::parse(read_text(dir + "/tables.json"));
    std::vector<Table> out;
    for (const auto& t : j.at("tables")) {
        Table table;
        table.number = t.at("table").get<int>();
        table.q = t.at("q").get<uint32_t>();
        for (const auto& r : t.at("rows")) {
            TableEntry e;
            e.g = r.at("g").get<int64_t>();
            e.order = r.at("order").get<uint64_t>();
            e.structure = r.at("structure").get<std::string>();
            e.types = r.value("types", std::vector<std::string>{});
            e.description = r.value("description", std::string{});
            table.rows.push_back(std::move(e));
        }
        out.push_back(std::move(table));
    }
    return out;
}

const Table& find_table(const std::vector<Table>& tables, uint32_t q) {
    require_prime_power(q);
    for (const auto& t : tables)
        if (t.q == q) return t;
    fail("NoTable", "no genus table for q = " + std::to_string(q));
}

std::string row_fixture_path(const std::string& dir, uint32_t q, size_t row) {
    return dir + "/" + pad2(q) + "/row" + std::to_string(row) + ".json";
}

std::string status_name(RowStatus s) {
    switch (s) {
        case RowStatus::reproduced:
            return "reproduced";
        case RowStatus::mismatch:
            return "mismatch";
        case RowStatus::unconstructed:
            return "unconstructed";
        case RowStatus::erratum_suspected:
            return "erratum-suspected";
    }
    return "?";
}

std::string TableRow::to_json() const {
    ojson j;
    j["q"] = q;
    j["row"] = index;
    j["g"] = g_expected;
    j["order"] = order_expected;
    j["structure"] = structure;
    j["fixture"] = fixture;
    j["status"] = status_name(status);
    j["engine_order"] = engine_order ? ojson(*engine_order) : ojson(nullptr);
    j["engine_genus"] = engine_genus ? ojson(*engine_genus) : ojson(nullptr);
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

bool TableReport::ok() const {
    return std::none_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.status == RowStatus::mismatch; });
}

size_t TableReport::count(RowStatus s) const {
    return static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [&](const TableRow& r) { return r.status == s; }));
}

std::string TableReport::to_json() const {
    ojson j;
    j["q"] = q;
    j["table"] = number;
    j["rows"] = ojson::array();
    for (const auto& r : rows) j["rows"].push_back(ojson::parse(r.to_json()));
    ojson s;
    for (RowStatus st : {RowStatus::reproduced, RowStatus::mismatch, RowStatus::unconstructed, RowStatus::erratum_suspected})
        s[status_name(st)] = count(st);
    j["summary"] = s;
    return j.dump();
}

std::string TableReport::to_text() const {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "Table %d: quotients of the Hermitian curve for q = %u\n", number, q);
    os << line;
    std::snprintf(line, sizeof line, "%5s %7s  %-24s %-18s %s\n", "g", "|G|", "structure", "status", "engine");
    os << line;
    for (const auto& r : rows) {
        std::string engine = "-";
        if (r.engine_order) {
            engine = "|G|=" + std::to_string(*r.engine_order) + " g=";
            engine += r.engine_genus ? std::to_string(*r.engine_genus) : std::string("non-integral");
        }
        std::snprintf(line, sizeof line, "%5lld %7llu  %-24s %-18s %s\n", static_cast<long long>(r.g_expected),
                      static_cast<unsigned long long>(r.order_expected), r.structure.c_str(),
                      status_name(r.status).c_str(), engine.c_str());
        os << line;
    }
    os << count(RowStatus::reproduced) << " reproduced, " << count(RowStatus::mismatch) << " mismatch, "
       << count(RowStatus::unconstructed) << " unconstructed, " << count(RowStatus::erratum_suspected)
       << " erratum-suspected\n";
    return os.str();
}

const std::vector<std::pair<uint32_t, int64_t>>& registry_rows() {
    static const std::vector<std::pair<uint32_t, int64_t>> rows{{5, 1}, {11, 2}, {16, 24}, {17, 11}, {19, 21}, {19, 2}, {19, 1}, {29, 3}};
    return rows;
}

namespace {

bool in_registry(uint32_t q, int64_t g) {
    const auto& rows = registry_rows();
    return std::find(rows.begin(), rows.end(), std::make_pair(q, g)) != rows.end();
}

TableRow run_row(uint32_t q, size_t index, const TableEntry& e, const std::string& dir) {
    TableRow row;
    row.q = q;
    row.index = index;
    row.g_expected = e.g;
    row.order_expected = e.order;
    row.structure = e.structure;
    const bool suspect = in_registry(q, e.g);
    const std::string path = row_fixture_path(dir, q, index);
    if (!std::filesystem::exists(path)) {
        row.status = suspect ? RowStatus::erratum_suspected : RowStatus::unconstructed;
        return row;
    }
    row.fixture = std::filesystem::relative(path, dir).string();
    try {
        const GeneratorFile file = read_generator_file(path);
        const Group G = closure(file.set.model, file.set.gens);
        row.engine_order = G.order();
        try {
            row.engine_genus = quotient_genus(G, 1).genus;
        } catch (const NonIntegralGenus&) {
            row.note = "non-integral genus";
        }
    } catch (const Error& err) {
        row.note = err.what();
    }
    const bool same = row.engine_order == e.order && row.engine_genus == e.g;
    if (same) row.status = RowStatus::reproduced;
    else row.status = suspect ? RowStatus::erratum_suspected : RowStatus::mismatch;
    return row;
}

}  // namespace

TableReport run_table(uint32_t q, const std::string& dir, unsigned threads) {
    require_prime_power(q);
    const auto tables = load_tables(dir);
    const Table& t = find_table(tables, q);
    TableReport report;
    report.q = q;
    report.number = t.number;
    report.rows.resize(t.rows.size());
    parallel_for(t.rows.size(), threads, [&](size_t i) { report.rows[i] = run_row(q, i + 1, t.rows[i], dir); });
    return report;
}

// ---------------------------------------------------------------- registry

std::string ErratumCheck::to_json() const {
    ojson j;
    j["id"] = id;
    j["subject"] = subject;
    j["printed"] = printed;
    j["engine"] = engine;
    j["discrepancy"] = discrepancy;
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

std::string RegistryReport::to_json() const {
    ojson j = ojson::array();
    for (const auto& e : entries) j.push_back(ojson::parse(e.to_json()));
    return ojson{{"entries", j}}.dump();
}

std::string RegistryReport::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.discrepancy ? "[discrepancy] " : "[consistent]  ") << e.id << ": " << e.subject << "\n"
           << "    printed: " << e.printed << "\n"
           << "    engine:  " << e.engine << "\n";
        if (!e.note.empty()) os << "    note:    " << e.note << "\n";
    }
    return os.str();
}

namespace {

struct GroupFacts {
    uint64_t order = 0;
    std::optional<int64_t> genus;
    std::string census;
};

std::string census_string(const Census& c) {
    std::string out;
    for (const auto& [o, k] : c) out += (out.empty() ? "" : ",") + std::to_string(o) + ":" + std::to_string(k);
    return "{" + out + "}";
}

GroupFacts facts(const GeneratorSet& s) {
    const Group G = closure(s.model, s.gens);
    GroupFacts f;
    f.order = G.order();
    f.census = census_string(census(G));
    try {
        f.genus = quotient_genus(G, 1).genus;
    } catch (const NonIntegralGenus&) {
    }
    return f;
}

std::string describe(const GroupFacts& f) {
    return "|G|=" + std::to_string(f.order) + " g=" + (f.genus ? std::to_string(*f.genus) : "non-integral") +
           " orders " + f.census;
}

std::string search_outcome(uint32_t q, SearchTarget target, const std::string& label) {
    try {
        const SearchHit hit = seeded_search(q, target, 1, 3000);
        return label + ": |G|=" + std::to_string(hit.report.order) + " g=" + std::to_string(hit.report.genus) +
               " (host " + hit.host + ")";
    } catch (const Error&) {
        return label + ": none found";
    }
}

ErratumCheck formula_entry(const std::string& id, const std::string& subject, FormulaId fid, const Params& params,
                           const std::function<GeneratorSet()>& recipe) {
    ErratumCheck e;
    e.id = id;
    e.subject = subject;
    const GeneratorSet gens = recipe();
    const Crosscheck c = crosscheck(fid, params, gens);
    e.printed = formula_name(fid) + (c.formula.branch.empty() ? "" : " branch " + c.formula.branch) + " gives " +
                c.formula.value_string();
    e.engine = "g=" + std::to_string(c.engine.genus) + " for |G|=" + std::to_string(c.engine.order);
    e.discrepancy = !c.match;
    return e;
}

using Check = std::function<ErratumCheck(unsigned)>;

std::vector<Check> registry_checks() {
    std::vector<Check> out;
    out.push_back([](unsigned) {
        return formula_entry("alternating-q5", "Alt(4) quotient at q=5", FormulaId::P5_3, {{"q", 5}},
                             [] { return alternating4(5); });
    });
    out.push_back([](unsigned) {
        return formula_entry("alternating-q13", "Alt(4) quotient at q=13", FormulaId::P5_3, {{"q", 13}},
                             [] { return alternating4(13); });
    });
    out.push_back([](unsigned) {
        ErratumCheck e = formula_entry("subfield-pgu-2-8", "PGU(3,2) inside PGU(3,8)", FormulaId::P5_1,
                                       {{"q", 8}, {"qbar", 2}}, [] { return subfield_pgu(2, 8); });
        e.note = "the delta rule gives a non-integral value";
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e =
            formula_entry("split-branch-6", "C_d x C_m split, d odd, m = 2 mod 4, non-commuting", FormulaId::P4_5,
                          {{"q", 11}, {"d", 1}, {"m", 6}, {"commuting", 0}},
                          [] { return cyclic_by_cyclic_split(11, 1, 6, false); });
        e.note = "off by one at every admissible point checked";
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "symmetric-vacuous";
        e.subject = "Sym(3) quotient at q=9";
        try {
            e.printed = eval_formula(FormulaId::P5_4, {{"q", 9}}).value_string();
        } catch (const HypothesisViolated& err) {
            e.printed = std::string("no branch applies (") + err.what() + ")";
        }
        const GroupFacts f = facts(symmetric3(9));
        e.engine = describe(f);
        e.discrepancy = true;
        e.note = "the branch conditions exclude every q although the group exists";
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "mq-order";
        e.subject = "order of the SL(2,q) extension at q=3 and q=5";
        std::string printed, engine;
        bool differs = false;
        for (uint32_t q : {3u, 5u}) {
            const uint64_t stated = uint64_t{q} * (q - 1) * (q + 1);
            const GeneratorSet g = mq_generators(q);
            const uint64_t got = closure_order(g.model, g.gens);
            printed += (printed.empty() ? "" : ", ") + std::string("q=") + std::to_string(q) + ": " + std::to_string(stated);
            engine += (engine.empty() ? "" : ", ") + std::string("q=") + std::to_string(q) + ": " + std::to_string(got);
            differs = differs || got != stated;
        }
        std::string unitary;
        for (uint32_t q : {3u, 5u}) {
            const bool ok = is_unitary(*HermitianModel::make(ModelTag::m3, q), mq_alpha_printed(q));
            unitary += (unitary.empty() ? "" : ", ") + std::string("q=") + std::to_string(q) + (ok ? " yes" : " no");
            differs = differs || !ok;
        }
        e.printed = "q(q-1)(q+1): " + printed;
        e.engine = engine;
        e.discrepancy = differs;
        e.note = "printed complement generator unitary: " + unitary + "; with 1+e^(q-1) the closure has order q(q^2-1)(q+1)";
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q5-g1";
        e.subject = "q=5 row g=1, C_3 of type A";
        e.printed = "|G|=3, g=1";
        std::string genera;
        bool found = false;
        for (const auto& s : cyclic_spectrum(5, 3)) {
            if (s.order != 3) continue;
            genera += (genera.empty() ? "" : ", ") + etype_name(s.type) + ": g=" + std::to_string(s.genus);
            found = found || s.genus == 1;
        }
        e.engine = "order-3 subgroups give " + genera;
        e.discrepancy = !found;
        e.note = search_outcome(5, {3, {}, std::nullopt, 1}, "order 3 with g=1");
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q11-g2";
        e.subject = "q=11 row g=2, C_15 of type B2";
        e.printed = "|G|=15, g=2";
        GeneratorSet t = b2_element(11, 120);
        const Field& F = *t.model->field;
        t.gens[0] = normalize(F, mat_pow(F, t.gens[0], 8));
        const GroupFacts f = facts(t);
        e.engine = "the order-15 subgroup of the split torus: " + describe(f);
        e.discrepancy = f.genus != 2;
        e.note = "15 divides q^2-1 only, so every C_15 lies in a conjugate of that torus";
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q19-g21";
        e.subject = "q=19 row g=21 prints |G|=6 and names Q_8";
        e.printed = "|G|=6, Q_8";
        SearchTarget six{6, {}, std::nullopt, 21};
        SearchTarget q8{8, *named_census("Q_8"), std::nullopt, std::nullopt};
        e.engine = search_outcome(19, six, "order 6 with g=21") + "; " + search_outcome(19, q8, "Q_8");
        e.discrepancy = true;
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q19-g2";
        e.subject = "q=19 row g=2 prints |G|=18 and names SG(32,11)";
        e.printed = "|G|=18, SG(32,11)";
        SearchTarget eighteen{18, {}, std::nullopt, 2};
        SearchTarget wreath{32, *named_census("SG(32,11)"), std::nullopt, std::nullopt};
        e.engine = search_outcome(19, eighteen, "order 18 with g=2") + "; " + search_outcome(19, wreath, "SG(32,11)");
        e.discrepancy = true;
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q19-g1";
        e.subject = "q=19 row g=1 prints |G|=141 for C_49 : C_3";
        e.printed = "|G|=141, C_49 : C_3";
        GeneratorSet n = singer_normalizer(19);
        const Field& F = *n.model->field;
        n.gens[0] = normalize(F, mat_pow(F, n.gens[0], 7));
        const GroupFacts f = facts(n);
        e.engine = "C_49 : C_3 from the Singer normalizer: " + describe(f);
        e.discrepancy = f.order != 141 || f.genus != 1;
        e.note = "141 does not divide |PGU(3,19)|";
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q8-c19";
        e.subject = "q=8 row g=1, C_19";
        e.printed = "|G|=19, g=1";
        GeneratorSet s = singer(8);
        const Field& F = *s.model->field;
        s.gens[0] = normalize(F, mat_pow(F, s.gens[0], 3));
        const GroupFacts f = facts(s);
        e.engine = describe(f);
        e.discrepancy = f.order != 19 || f.genus != 1;
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q29-g3";
        e.subject = "q=29 row g=3, Q_8 : C_15 of order 120";
        e.printed = "|G|=120, g=3";
        GeneratorSet s;
        try {
            const SearchHit hit = seeded_search(29, {24, *named_census("SL(2,3)"), std::nullopt, std::nullopt}, 1, 4000, {"sl2"});
            s = hit.set;
            const Field& F = *s.model->field;
            s.gens.push_back(mat_diag(F.pow(element_of_order(F, 30), 6), F.pow(element_of_order(F, 30), 6), 1));
            const GroupFacts f = facts(s);
            e.engine = "SL(2,3) x C_5: " + describe(f);
            e.discrepancy = f.order != 120 || f.genus != 3;
        } catch (const Error& err) {
            e.engine = std::string("not constructed: ") + err.what();
            e.discrepancy = true;
        }
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q16-g24";
        e.subject = "q=16 row g=24, C_2 x C_2 with both generators of type A";
        e.printed = "C_2 x C_2, types A and A";
        std::set<std::string> types;
        for (const auto& s : cyclic_spectrum(16, 2)) types.insert(etype_name(s.type));
        std::string list;
        for (const auto& t : types) list += (list.empty() ? "" : ",") + t;
        e.engine = "involutions at q=16 have types {" + list + "}";
        e.discrepancy = types.count("A") == 0;
        e.note = search_outcome(16, {4, *named_census("C_2 x C_2"), std::nullopt, 24}, "C_2 x C_2 with g=24");
        return e;
    });
    out.push_back([](unsigned) {
        ErratumCheck e;
        e.id = "q17-g11";
        e.subject = "q=17 row g=11 prints |G|=8 for Dic_12";
        e.printed = "|G|=8, Dic_12";
        SearchTarget dic{12, *named_census("Dic_12"), std::nullopt, std::nullopt};
        SearchTarget eight{8, {}, std::nullopt, 11};
        e.engine = search_outcome(17, dic, "Dic_12") + "; " + search_outcome(17, eight, "order 8 with g=11");
        e.discrepancy = true;
        return e;
    });
    return out;
}

}  // namespace

RegistryReport run_registry(const std::string& dir, unsigned threads) {
    (void)dir;
    const auto checks = registry_checks();
    RegistryReport report;
    report.entries.resize(checks.size());
    parallel_for(checks.size(), threads, [&](size_t i) {
        try {
            report.entries[i] = checks[i](1);
        } catch (const Error& err) {
            report.entries[i].id = "entry-" + std::to_string(i);
            report.entries[i].engine = err.what();
            report.entries[i].discrepancy = true;
        }
    });
    return report;
}

// -------------------------------------------------------------- full scan

std::vector<int64_t> cyclic_formula_values(uint32_t q) {
    std::set<int64_t> out;
    auto add = [&](const Params& p) {
        try {
            const Evaluation e = eval_formula(FormulaId::R5_6, p);
            if (e.integral() && e.value >= 0) out.insert(static_cast<int64_t>(numerator(e.value)));
        } catch (const Error&) {
        }
    };
    const int64_t Q = q;
    for (int64_t c : {1, 2, 7}) add({{"q", Q}, {"case", c}});
    for (uint64_t d : divisors(q + 1)) add({{"q", Q}, {"case", 3}, {"d", static_cast<int64_t>(d)}});
    for (uint64_t d : divisors(uint64_t{q} * q - q + 1)) add({{"q", Q}, {"case", 4}, {"d", static_cast<int64_t>(d)}});
    for (uint64_t d : divisors(uint64_t{q} * q - 1)) add({{"q", Q}, {"case", 5}, {"d", static_cast<int64_t>(d)}});
    const auto divs = divisors(q + 1);
    for (uint64_t d : divs)
        for (uint64_t r1 : divs)
            for (uint64_t r2 : divs)
                for (uint64_t r3 : divs)
                    add({{"q", Q},
                         {"case", 6},
                         {"d", static_cast<int64_t>(d)},
                         {"r1", static_cast<int64_t>(r1)},
                         {"r2", static_cast<int64_t>(r2)},
                         {"r3", static_cast<int64_t>(r3)}});
    return {out.begin(), out.end()};
}

std::string ScanReport::to_json() const {
    ojson j;
    j["q"] = q;
    j["order"] = group_order;
    j["expected_order"] = expected_order;
    ojson c, x;
    for (int t = 0; t < kETypeCount; ++t) {
        c[etype_name(static_cast<EType>(t))] = counts[t];
        x[etype_name(static_cast<EType>(t))] = expected[t];
    }
    j["counts"] = c;
    j["expected"] = x;
    j["classes_ok"] = classes_ok();
    ojson cyc = ojson::array();
    for (const auto& s : cyclic) cyc.push_back({{"order", s.order}, {"type", etype_name(s.type)}, {"genus", s.genus}});
    j["cyclic"] = cyc;
    j["unexplained_genera"] = unexplained_genera;
    j["cyclic_ok"] = cyclic_ok();
    return j.dump();
}

std::string ScanReport::to_text() const {
    std::ostringstream os;
    os << "PGU(3," << q << "): " << group_order << " elements (expected " << expected_order << ")\n";
    for (int t = 0; t < kETypeCount; ++t)
        os << "  " << etype_name(static_cast<EType>(t)) << ": " << counts[t] << " (expected " << expected[t] << ")\n";
    os << "class sizes " << (classes_ok() ? "agree" : "disagree") << "\n";
    os << cyclic.size() << " cyclic (order, type, genus) classes; ";
    if (cyclic_ok()) {
        os << "every genus has a closed form\n";
    } else {
        os << "genera without a closed form:";
        for (int64_t g : unexplained_genera) os << " " << g;
        os << "\n";
    }
    return os.str();
}

ScanReport full_scan(uint32_t q, unsigned threads) {
    require_prime_power(q);
    if (q > 5) fail("FieldTooLarge", "full scan is limited to q <= 5");
    const GeneratorSet gens = pgu_generators(ModelTag::norm_trace, q);
    const Group G = closure(gens.model, gens.gens);
    const HermitianModel& model = *G.model();
    const Field& F = *model.field;
    const auto& elems = G.elements();
    const Mat3 id = mat_identity();

    ScanReport r;
    r.q = q;
    r.group_order = G.order();
    const uint64_t Q = q;
    r.expected_order = Q * Q * Q * (Q * Q * Q + 1) * (Q * Q - 1);
    r.expected[static_cast<int>(EType::C)] = (Q - 1) * (Q * Q * Q + 1);
    r.expected[static_cast<int>(EType::D)] = (Q * Q * Q - Q) * (Q * Q * Q + 1);
    r.expected[static_cast<int>(EType::A)] = Q * (Q * Q * Q * Q - Q * Q * Q + Q * Q);
    r.expected[static_cast<int>(EType::B2)] = (Q * Q - Q - 2) * (Q * Q * Q + 1) * Q * Q * Q / 2;
    r.expected[static_cast<int>(EType::B3)] = (Q * Q - Q) * (Q * Q * Q * Q * Q * Q + Q * Q * Q * Q * Q - Q * Q * Q * Q - Q * Q * Q) / 3;
    r.expected[static_cast<int>(EType::E)] = (Q - 1) * Q * (Q * Q * Q + 1) * Q * Q;
    r.expected[static_cast<int>(EType::B1)] = Q * Q * Q * Q * (Q - 1) * (Q - 1) * (Q * Q - Q + 1) / 6;

    std::vector<int8_t> type(elems.size(), -1);
    const unsigned workers = worker_count(threads, elems.size() / 256 + 1);
    std::vector<std::array<uint64_t, kETypeCount>> part(workers);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t]() {
            try {
                part[t].fill(0);
                for (size_t i = t; i < elems.size(); i += workers) {
                    if (elems[i] == id) continue;
                    const EType ty = classify(model, elems[i]).type;
                    type[i] = static_cast<int8_t>(ty);
                    ++part[t][static_cast<int>(ty)];
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (const auto& p : part)
        for (int t = 0; t < kETypeCount; ++t) r.counts[t] += p[t];

    // One pass per cyclic subgroup; the census comes from the stored types of its powers.
    std::unordered_map<Mat3, size_t, Mat3Hash> index;
    index.reserve(elems.size() * 2);
    for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
    std::vector<char> seen(elems.size(), 0);
    std::set<SpectrumEntry> spectrum;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (seen[i] || elems[i] == id) continue;
        std::vector<size_t> powers;
        for (Mat3 x = elems[i]; x != id; x = normalize(F, mat_mul(F, x, elems[i]))) powers.push_back(index.at(x));
        const uint64_t n = powers.size() + 1;
        GenusReport rep;
        rep.q = q;
        rep.order = n;
        for (int t = 0; t < kETypeCount; ++t) rep.census[t].i = contribution(static_cast<EType>(t), q);
        for (uint64_t j = 1; j < n; ++j) {
            ++rep.census[type[powers[j - 1]]].count;
            if (gcd(j, n) == 1) seen[powers[j - 1]] = 1;
        }
        spectrum.insert({n, static_cast<EType>(type[i]), finish_report(rep).genus});
    }
    r.cyclic.assign(spectrum.begin(), spectrum.end());
    const auto values = cyclic_formula_values(q);
    std::set<int64_t> missing;
    for (const auto& s : r.cyclic)
        if (!std::binary_search(values.begin(), values.end(), s.genus)) missing.insert(s.genus);
    r.unexplained_genera.assign(missing.begin(), missing.end());
    return r;
}

}  // namespace uqg
