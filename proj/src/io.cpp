#include "uqg/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace uqg {

using ojson = nlohmann::ordered_json;

namespace {

ojson entry_json(const Field& F, Elem a) {
    ojson v = ojson::array();
    for (uint32_t c : F.coeffs(a)) v.push_back(c);
    return v;
}

Elem entry_value(const Field& F, const nlohmann::json& v) {
    if (v.is_number_integer()) return F.from_int(v.get<int64_t>());
    if (!v.is_array() || v.size() > F.k()) fail("BadGeneratorFile", "matrix entry must be an integer or coefficient vector");
    std::vector<uint32_t> c;
    for (const auto& x : v) {
        const int64_t t = x.get<int64_t>();
        c.push_back(static_cast<uint32_t>(((t % F.p()) + F.p()) % F.p()));
    }
    c.resize(F.k(), 0);
    return F.from_coeffs(c);
}

Mat3 matrix_value(const Field& F, const nlohmann::json& rows) {
    if (!rows.is_array() || rows.size() != 3) fail("BadGeneratorFile", "a matrix has three rows");
    Mat3 m{};
    for (int r = 0; r < 3; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 3) fail("BadGeneratorFile", "a matrix row has three entries");
        for (int c = 0; c < 3; ++c) m[3 * r + c] = entry_value(F, rows[r][c]);
    }
    return m;
}

}  // namespace

std::string to_json(const GeneratorFile& file) {
    const HermitianModel& model = *file.set.model;
    const Field& F = *model.field;
    ojson j;
    j["q"] = model.q;
    j["model"] = model_name(model.tag);
    ojson gens = ojson::array();
    for (const Mat3& m : file.set.gens) {
        ojson rows = ojson::array();
        for (int r = 0; r < 3; ++r)
            rows.push_back({entry_json(F, m[3 * r]), entry_json(F, m[3 * r + 1]), entry_json(F, m[3 * r + 2])});
        gens.push_back(rows);
    }
    j["generators"] = gens;
    if (!file.set.recipe.empty()) j["recipe"] = file.set.recipe;
    if (file.order) j["order"] = file.order;
    if (!file.structure.empty()) j["structure"] = file.structure;
    j["provenance"] = ojson::parse(file.provenance_json);
    return j.dump();
}

GeneratorFile generator_file_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("BadGeneratorFile", e.what());
    }
    if (!j.contains("q") || !j.contains("generators")) fail("BadGeneratorFile", "q and generators are required");
    const auto q = j.at("q").get<uint32_t>();
    const ModelTag tag = parse_model(j.value("model", std::string("fermat")));
    GeneratorFile out;
    out.set.model = HermitianModel::make(tag, q);
    const Field& F = *out.set.model->field;
    for (const auto& g : j.at("generators")) {
        Mat3 m = normalize(F, matrix_value(F, g));
        if (!is_unitary(*out.set.model, m)) fail("NotUnitary", "generator does not preserve the Hermitian form");
        out.set.gens.push_back(m);
    }
    out.set.recipe = j.value("recipe", std::string());
    out.structure = j.value("structure", std::string());
    out.order = j.value("order", uint64_t{0});
    if (j.contains("provenance")) out.provenance_json = j.at("provenance").dump();
    return out;
}

Elem parse_element(const Field& F, const std::string& text) {
    nlohmann::json v;
    try {
        v = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
        fail("BadElement", "cannot parse field element '" + text + "'");
    }
    return entry_value(F, v);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("FileNotFound", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GeneratorFile read_generator_file(const std::string& path) { return generator_file_from_json(read_text(path)); }

void write_generator_file(const std::string& path, const GeneratorFile& file) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path);
    if (!out) fail("FileNotWritable", "cannot write " + path);
    out << to_json(file) << "\n";
}

Mat3 parse_matrix(const Field& F, const std::string& text) {
    std::string clean;
    for (size_t i = 0; i < text.size(); ++i) {
        // U+2212 minus sign
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            clean += '-';
            i += 2;
        } else {
            clean += text[i];
        }
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(clean);
    } catch (const nlohmann::json::exception& e) {
        fail("BadMatrix", e.what());
    }
    return matrix_value(F, j);
}

}  // namespace uqg
