#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "uqg/arith.hpp"
#include "uqg/catalog.hpp"
#include "uqg/harness.hpp"
#include "uqg/io.hpp"
#include "uqg/model_counter.hpp"
#include "uqg/search.hpp"

using namespace uqg;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kComputeError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    uint32_t q = 0;
    std::string model = "fermat";
    std::string gens;
    bool json = false;
    uint64_t seed = 1;
    uint64_t budget = 4000;
    unsigned threads = 0;
    std::string fixtures_dir;
    std::string matrix;
    std::string formula;
    std::map<std::string, int64_t> params;
    std::vector<std::string> param_list;
    std::string lambda;
    std::string structure;
    uint64_t order = 0;
    std::optional<int64_t> genus;
    std::string out;
    bool registry = false;
    bool list = false;
};

std::string fixtures(const Options& o) { return o.fixtures_dir.empty() ? default_fixtures_dir() : o.fixtures_dir; }

uint32_t need_q(const Options& o) {
    if (o.q == 0) throw UsageError("--q is required");
    return o.q;
}

Params formula_params(const Options& o) {
    Params p = o.params;
    for (const std::string& kv : o.param_list) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + kv + "'");
        try {
            p[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--param value must be an integer: '" + kv + "'");
        }
    }
    if (o.q) p["q"] = o.q;
    return p;
}

FormulaId need_formula(const Options& o) {
    if (o.formula.empty()) throw UsageError("--formula is required");
    try {
        return parse_formula(o.formula);
    } catch (const Error&) {
        throw UsageError("unknown formula '" + o.formula + "'");
    }
}

ojson genus_json(const GenusReport& r) {
    const ojson full = ojson::parse(r.to_json());
    ojson j;
    j["genus"] = r.genus;
    for (const auto& [k, v] : full.items())
        if (k != "genus") j[k] = v;
    return j;
}

int field_info(const Options& o) {
    const uint32_t q = need_q(o);
    const auto pp = prime_power(q);
    if (!pp) fail("NotAPrimePower", std::to_string(q) + " is not a prime power");
    const auto model = HermitianModel::make(ModelTag::fermat, q);
    const Field& F = *model->field;
    ojson j;
    j["q"] = q;
    j["p"] = pp->first;
    j["h"] = pp->second;
    j["size"] = F.size();
    j["modulus"] = F.modulus();
    j["primitive"] = F.coeffs(F.primitive());
    j["genus"] = uint64_t{q} * (q - 1) / 2;
    j["pgu_order"] = uint64_t{q} * q * q * (uint64_t{q} * q * q + 1) * (uint64_t{q} * q - 1);
    if (o.json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "GF(" << F.size() << ") = GF(" << pp->first << ")[x]/(modulus " << j["modulus"].dump() << ")\n"
                  << "q = " << q << " = " << pp->first << "^" << pp->second << ", Hermitian genus "
                  << j["genus"].dump() << ", |PGU(3,q)| = " << j["pgu_order"].dump() << "\n";
    }
    return 0;
}

int classify_cmd(const Options& o) {
    const uint32_t q = need_q(o);
    if (o.matrix.empty()) throw UsageError("--matrix is required");
    const auto model = HermitianModel::make(parse_model(o.model), q);
    const Mat3 M = normalize(*model->field, parse_matrix(*model->field, o.matrix));
    if (!is_unitary(*model, M)) fail("NotUnitary", "matrix does not preserve the " + o.model + " form");
    const ElementClass c = classify(*model, M);
    ojson j{{"type", etype_name(c.type)}, {"order", c.order}, {"i", c.i}};
    std::cout << j.dump() << "\n";
    return 0;
}

int genus_cmd(const Options& o) {
    if (o.gens.empty()) throw UsageError("--gens is required");
    const GeneratorFile file = read_generator_file(o.gens);
    if (o.q && o.q != file.set.model->q)
        fail("QMismatch", "--q " + std::to_string(o.q) + " disagrees with the file (q = " +
                              std::to_string(file.set.model->q) + ")");
    const Group G = closure(file.set.model, file.set.gens);
    std::cout << genus_json(quotient_genus(G, o.threads)).dump() << "\n";
    return 0;
}

int catalog_cmd(const Options& o) {
    if (o.list) {
        ojson j = ojson::array();
        for (FormulaId id : all_formulas()) {
            ojson b = ojson::array();
            for (const auto& [label, printed] : formula_branches(id)) b.push_back({{"branch", label}, {"form", printed}});
            j.push_back({{"formula", formula_name(id)}, {"branches", b}});
        }
        std::cout << j.dump(o.json ? -1 : 1) << "\n";
        return 0;
    }
    const FormulaId id = need_formula(o);
    std::cout << eval_formula(id, formula_params(o)).to_json() << "\n";
    return 0;
}

int crosscheck_cmd(const Options& o) {
    const FormulaId id = need_formula(o);
    const Params p = formula_params(o);
    GeneratorSet gens;
    if (!o.gens.empty()) {
        gens = read_generator_file(o.gens).set;
    } else {
        auto r = formula_recipe(id, p);
        if (!r) fail("NoRecipe", formula_name(id) + " has no construction for these parameters; pass --gens");
        gens = *r;
    }
    const Crosscheck c = crosscheck(id, p, gens);
    std::cout << c.to_json() << "\n";
    return 0;
}

int table_cmd(const Options& o) {
    if (o.registry) {
        const RegistryReport r = run_registry(fixtures(o), o.threads);
        std::cout << (o.json ? r.to_json() + "\n" : r.to_text());
        return 0;
    }
    const TableReport r = run_table(need_q(o), fixtures(o), o.threads);
    std::cout << (o.json ? r.to_json() + "\n" : r.to_text());
    return r.ok() ? 0 : kComputeError;
}

int scan_cmd(const Options& o) {
    const ScanReport r = full_scan(need_q(o), o.threads);
    std::cout << (o.json ? r.to_json() + "\n" : r.to_text());
    return r.classes_ok() && r.cyclic_ok() ? 0 : kComputeError;
}

int count_cmd(const Options& o) {
    const uint32_t q = need_q(o);
    PointCount c;
    if (o.model == "tipoE") {
        const auto d = o.params.find("d");
        if (d == o.params.end()) throw UsageError("--d is required for tipoE");
        std::optional<Elem> lambda;
        if (!o.lambda.empty()) {
            const auto pp = prime_power(q);
            if (!pp) fail("NotAPrimePower", std::to_string(q) + " is not a prime power");
            lambda = parse_element(*Field::make(pp->first, 2 * pp->second), o.lambda);
        }
        c = count_tipoE(q, static_cast<uint64_t>(d->second), lambda, o.threads);
    } else if (o.model == "case1" || o.model == "case2" || o.model == "case5") {
        c = count_named_model(o.model.back() - '0', q, o.params, o.threads);
    } else {
        throw UsageError("--model must be tipoE, case1, case2 or case5 for count");
    }
    std::cout << c.to_json() << "\n";
    return 0;
}

int search_cmd(const Options& o) {
    const uint32_t q = need_q(o);
    SearchTarget target;
    target.genus = o.genus;
    if (!o.structure.empty()) {
        auto c = named_census(o.structure);
        if (!c) throw UsageError("no element-order census known for '" + o.structure + "'");
        target.census = *c;
        target.order = 0;
        for (const auto& [ord, k] : *c) target.order += k;
    }
    if (o.order) {
        if (!o.structure.empty() && o.order != target.order)
            throw UsageError("--order disagrees with the order of " + o.structure);
        target.order = o.order;
    }
    if (o.structure.empty() && !o.order) throw UsageError("--order or --structure is required");
    const SearchHit hit = seeded_search(q, target, o.seed, o.budget);
    ojson j;
    j["host"] = hit.host;
    j["attempt"] = hit.attempt;
    j["seed"] = o.seed;
    j["report"] = genus_json(hit.report);
    GeneratorFile file;
    file.set = hit.set;
    file.structure = o.structure;
    file.order = hit.report.order;
    file.provenance_json =
        ojson{{"method", "search"}, {"seed", o.seed}, {"budget", o.budget}, {"host", hit.host}, {"attempt", hit.attempt}}
            .dump();
    j["generators"] = ojson::parse(to_json(file));
    if (!o.out.empty()) write_generator_file(o.out, file);
    std::cout << j.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quotients of the Hermitian curve by subgroups of PGU(3,q)"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--q", o.q, "field order q, a prime power");
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    };
    auto formula_opts = [&](CLI::App* sub) {
        sub->add_option("--formula", o.formula, "formula id, e.g. P4_5");
        sub->add_option("--param", o.param_list, "formula parameter name=value (repeatable)");
        for (const char* name : {"qbar", "pk", "d", "m", "n", "commuting", "central", "sg", "delta", "case", "r1", "r2", "r3"})
            sub->add_option_function<int64_t>(std::string("--") + name, [&o, name](const int64_t& v) { o.params[name] = v; },
                                              std::string("formula parameter ") + name);
    };

    auto* info = app.add_subcommand("field-info", "describe GF(q^2) and the Hermitian curve");
    common(info);

    auto* cls = app.add_subcommand("classify", "geometric type of one projectivity");
    common(cls);
    cls->add_option("--model", o.model, "fermat, norm_trace or m3");
    cls->add_option("--matrix", o.matrix, "3x3 matrix literal");

    auto* gen = app.add_subcommand("genus", "genus of the quotient by a generated group");
    common(gen);
    gen->add_option("--gens", o.gens, "generator file");

    auto* cat = app.add_subcommand("catalog", "evaluate a closed-form genus formula");
    common(cat);
    formula_opts(cat);
    cat->add_flag("--list", o.list, "list formulas and branches");

    auto* cross = app.add_subcommand("crosscheck", "compare a formula with the engine");
    common(cross);
    formula_opts(cross);
    cross->add_option("--gens", o.gens, "generator file (default: built-in construction)");

    auto* tab = app.add_subcommand("table", "reproduce a genus table from fixtures");
    common(tab);
    tab->add_option("--fixtures-dir", o.fixtures_dir, "fixture root (default: UQG_FIXTURES or the source tree)");
    tab->add_flag("--registry", o.registry, "evaluate the erratum registry instead");

    auto* scan = app.add_subcommand("scan", "classify every element of PGU(3,q), q <= 5");
    common(scan);

    auto* cnt = app.add_subcommand("count", "point count of a quotient plane model");
    common(cnt);
    cnt->add_option("--model", o.model, "tipoE, case1, case2 or case5");
    cnt->add_option_function<int64_t>("--d", [&o](const int64_t& v) { o.params["d"] = v; }, "divisor d");
    cnt->add_option("--lambda", o.lambda, "lambda as an integer or coefficient vector");

    auto* srch = app.add_subcommand("search", "seeded random subgroup search");
    common(srch);
    srch->add_option("--structure", o.structure, "named structure, e.g. Q_8");
    srch->add_option("--order", o.order, "subgroup order");
    srch->add_option_function<int64_t>("--genus", [&o](const int64_t& v) { o.genus = v; }, "required quotient genus");
    srch->add_option("--seed", o.seed, "random seed");
    srch->add_option("--budget", o.budget, "attempts before giving up");
    srch->add_option("--out", o.out, "write the generators to this file");
    srch->add_option("--fixtures-dir", o.fixtures_dir, "fixture root");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*info) return field_info(o);
        if (*cls) return classify_cmd(o);
        if (*gen) return genus_cmd(o);
        if (*cat) return catalog_cmd(o);
        if (*cross) return crosscheck_cmd(o);
        if (*tab) return table_cmd(o);
        if (*scan) return scan_cmd(o);
        if (*cnt) return count_cmd(o);
        if (*srch) return search_cmd(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputeError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputeError;
    }
    return kUsageError;
}
