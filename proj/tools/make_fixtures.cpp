#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <regex>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "uqg/arith.hpp"
#include "uqg/harness.hpp"
#include "uqg/io.hpp"
#include "uqg/search.hpp"

using namespace uqg;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Built {
    GeneratorSet set;
    ojson provenance;
};

std::optional<uint64_t> cyclic_order(const std::string& structure) {
    static const std::regex cyclic("^C_(\\d+)$");
    std::smatch m;
    if (std::regex_match(structure, m, cyclic)) return std::stoull(m[1]);
    return std::nullopt;
}

std::optional<Built> build_cyclic(uint32_t q, const TableEntry& e, uint64_t n) {
    const std::string want = e.types.empty() ? "" : e.types.front();
    std::optional<Built> fallback;
    for (const GeneratorSet& c : cyclic_candidates(q)) {
        const HermitianModel& model = *c.model;
        const Field& F = *model.field;
        const uint64_t o = proj_order(model, c.gens[0]);
        if (o % n) continue;
        const Mat3 x = normalize(F, mat_pow(F, c.gens[0], o / n));
        const GenusReport r = cyclic_genus(model, x);
        if (r.genus != e.g) continue;
        const std::string type = etype_name(classify(model, x).type);
        ojson prov{{"method", "cyclic"}, {"source", c.recipe}, {"power", o / n}, {"type", type}};
        if (!want.empty()) prov["printed_type"] = want;
        Built b{{c.model, {x}, c.recipe}, prov};
        if (want.empty() || type == want) return b;
        if (!fallback) fallback = b;
    }
    return fallback;
}

std::optional<Built> build_search(uint32_t q, const TableEntry& e, uint64_t seeds, uint64_t budget) {
    SearchTarget target;
    target.order = e.order;
    target.genus = e.g;
    if (auto c = named_census(e.structure)) {
        target.census = *c;
        uint64_t n = 0;
        for (const auto& [o, k] : *c) n += k;
        target.order = n;  // the named group wins over a conflicting printed order
    }
    for (uint64_t seed = 1; seed <= seeds; ++seed) {
        try {
            const SearchHit hit = seeded_search(q, target, seed, budget);
            ojson prov{{"method", "search"}, {"seed", seed},        {"budget", budget},
                       {"host", hit.host},   {"attempt", hit.attempt}, {"census", !target.census.empty()}};
            return Built{hit.set, prov};
        } catch (const Error& err) {
            if (err.kind() != "NotFound") throw;
        }
    }
    return std::nullopt;
}

std::optional<Built> build_row(uint32_t q, const TableEntry& e, uint64_t seeds, uint64_t budget) {
    if (e.order == 1 && e.structure == "trivial") {
        auto model = HermitianModel::make(ModelTag::fermat, q);
        return Built{{model, {mat_identity()}, "trivial"}, ojson{{"method", "trivial"}}};
    }
    if (auto n = cyclic_order(e.structure); n && *n == e.order)
        if (auto b = build_cyclic(q, e, *n)) return b;
    return build_search(q, e, seeds, budget);
}

void write_manifest(const std::string& dir, const std::vector<Table>& tables) {
    ojson entries = ojson::array();
    for (const Table& t : tables)
        for (size_t i = 0; i < t.rows.size(); ++i) {
            const std::string path = row_fixture_path(dir, t.q, i + 1);
            if (!fs::exists(path)) continue;
            const auto j = nlohmann::json::parse(read_text(path));
            entries.push_back({{"q", t.q},
                               {"table", t.number},
                               {"row", i + 1},
                               {"g", t.rows[i].g},
                               {"order", t.rows[i].order},
                               {"structure", t.rows[i].structure},
                               {"file", fs::relative(path, dir).string()},
                               {"method", j.value("provenance", nlohmann::json::object()).value("method", "")}});
        }
    std::ofstream(dir + "/manifest.json") << ojson{{"fixtures", entries}}.dump(1) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Builds generator files for the genus table rows"};
    std::vector<uint32_t> qs;
    std::string dir = default_fixtures_dir();
    uint64_t budget = 3000, seeds = 2;
    unsigned threads = 0;
    bool force = false;
    app.add_option("--q", qs, "field orders (default: every table)");
    app.add_option("--fixtures-dir", dir, "fixture root");
    app.add_option("--budget", budget, "search attempts per seed");
    app.add_option("--seeds", seeds, "seeds tried per row");
    app.add_option("--threads", threads, "rows built concurrently");
    app.add_flag("--force", force, "rebuild existing fixtures");
    CLI11_PARSE(app, argc, argv);

    const auto tables = load_tables(dir);
    if (qs.empty())
        for (const Table& t : tables) qs.push_back(t.q);

    std::mutex log;
    for (uint32_t q : qs) {
        const Table& t = find_table(tables, q);
        const auto start = std::chrono::steady_clock::now();
        std::atomic<size_t> next{0}, built{0}, missing{0};
        auto work = [&]() {
            for (size_t i = next++; i < t.rows.size(); i = next++) {
                const std::string path = row_fixture_path(dir, q, i + 1);
                if (!force && fs::exists(path)) {
                    ++built;
                    continue;
                }
                std::optional<Built> b;
                try {
                    b = build_row(q, t.rows[i], seeds, budget);
                } catch (const Error& err) {
                    std::lock_guard<std::mutex> lock(log);
                    std::fprintf(stderr, "q=%u row %zu: %s\n", q, i + 1, err.what());
                }
                if (!b) {
                    ++missing;
                    std::lock_guard<std::mutex> lock(log);
                    std::fprintf(stderr, "q=%u row %zu (g=%lld, %s): not constructed\n", q, i + 1,
                                 static_cast<long long>(t.rows[i].g), t.rows[i].structure.c_str());
                    continue;
                }
                GeneratorFile file;
                file.set = b->set;
                file.structure = t.rows[i].structure;
                file.order = closure_order(b->set.model, b->set.gens);
                b->provenance["row"] = i + 1;
                b->provenance["table"] = t.number;
                file.provenance_json = b->provenance.dump();
                write_generator_file(path, file);
                ++built;
            }
        };
        unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::fprintf(stderr, "q=%u: %zu/%zu rows built, %zu missing, %.1fs\n", q, built.load(), t.rows.size(),
                     missing.load(), secs);
    }

    const std::string extra = dir + "/q05/c4_b2.json";
    if (force || !fs::exists(extra)) {
        GeneratorFile file;
        file.set = b2_element(5, 4);
        file.structure = "C_4";
        file.order = 4;
        file.provenance_json = ojson{{"method", "recipe"}, {"recipe", file.set.recipe}}.dump();
        write_generator_file(extra, file);
    }
    write_manifest(dir, tables);
    return 0;
}
