#include "uqg/genus.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "uqg/arith.hpp"
#include "uqg/constructions.hpp"

namespace uqg {

using ojson = nlohmann::ordered_json;

std::string GenusReport::to_json() const {
    ojson j;
    j["q"] = q;
    j["order"] = order;
    ojson c = ojson::object();
    for (int t = 0; t < kETypeCount; ++t)
        if (census[t].count) c[etype_name(static_cast<EType>(t))] = {census[t].count, census[t].i};
    j["census"] = c;
    j["delta"] = delta;
    j["genus_top"] = genus_top;
    j["genus"] = genus;
    return j.dump();
}

GenusReport GenusReport::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GenusReport r;
    r.q = j.at("q").get<uint32_t>();
    r.order = j.at("order").get<uint64_t>();
    for (const auto& [name, v] : j.at("census").items()) {
        auto& slot = r.census[static_cast<int>(parse_etype(name))];
        slot.count = v.at(0).get<uint64_t>();
        slot.i = v.at(1).get<uint32_t>();
    }
    r.delta = j.at("delta").get<uint64_t>();
    r.genus_top = j.value("genus_top", uint64_t{r.q} * (r.q - 1) / 2);
    r.genus = j.at("genus").get<int64_t>();
    return r;
}

NonIntegralGenus::NonIntegralGenus(GenusReport partial)
    : Error("NonIntegralGenus", "census " + partial.to_json() + " gives no integral genus"),
      report_(std::move(partial)) {}

GenusReport finish_report(GenusReport r) {
    r.genus_top = uint64_t{r.q} * (r.q - 1) / 2;
    r.delta = 0;
    for (int t = 0; t < kETypeCount; ++t) r.delta += r.census[t].count * r.census[t].i;
    const int64_t lhs = 2 * static_cast<int64_t>(r.genus_top) - 2 - static_cast<int64_t>(r.delta);
    const int64_t n = static_cast<int64_t>(r.order);
    r.genus = -1;
    if (n == 0 || lhs % n != 0) throw NonIntegralGenus(r);
    const int64_t two_h_minus_2 = lhs / n;
    if ((two_h_minus_2 + 2) % 2 != 0 || two_h_minus_2 < -2) throw NonIntegralGenus(r);
    r.genus = (two_h_minus_2 + 2) / 2;
    if (static_cast<uint64_t>(r.genus) > r.genus_top) throw NonIntegralGenus(r);
    return r;
}

GenusReport quotient_genus(const Group& G, unsigned threads) {
    const HermitianModel& model = *G.model();
    const Field& F = *model.field;
    const auto& elems = G.elements();
    const Mat3 id = mat_identity();

    std::unordered_map<Mat3, size_t, Mat3Hash> index;
    index.reserve(elems.size() * 2);
    for (size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

    // One representative per cyclic subgroup, weighted by its generator count.
    std::vector<char> seen(elems.size(), 0);
    std::vector<std::pair<size_t, uint64_t>> reps;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (seen[i] || elems[i] == id) continue;
        std::vector<size_t> powers;
        Mat3 x = elems[i];
        while (x != id) {
            auto it = index.find(x);
            if (it == index.end()) fail("NotClosed", "group element set is not closed");
            powers.push_back(it->second);
            x = normalize(F, mat_mul(F, x, elems[i]));
        }
        const uint64_t n = powers.size() + 1;
        uint64_t gens = 0;
        for (uint64_t j = 1; j < n; ++j)
            if (gcd(j, n) == 1) {
                seen[powers[j - 1]] = 1;
                ++gens;
            }
        reps.emplace_back(i, gens);
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(1, reps.size() / 64)));
    std::vector<std::array<uint64_t, kETypeCount>> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned t) {
        try {
            partial[t].fill(0);
            for (size_t r = t; r < reps.size(); r += threads) {
                const ElementClass c = classify(model, elems[reps[r].first]);
                partial[t][static_cast<int>(c.type)] += reps[r].second;
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    GenusReport r;
    r.q = model.q;
    r.order = G.order();
    for (int t = 0; t < kETypeCount; ++t) {
        for (const auto& p : partial) r.census[t].count += p[t];
        r.census[t].i = contribution(static_cast<EType>(t), model.q);
    }
    return finish_report(r);
}

GenusReport cyclic_genus(const HermitianModel& model, const Mat3& M) {
    const Field& F = *model.field;
    const uint64_t n = proj_order(model, M);
    GenusReport r;
    r.q = model.q;
    r.order = n;
    for (int t = 0; t < kETypeCount; ++t) r.census[t].i = contribution(static_cast<EType>(t), model.q);
    for (uint64_t d : divisors(n)) {
        if (d == n) continue;
        const ElementClass c = classify(model, mat_pow(F, M, d));
        r.census[static_cast<int>(c.type)].count += euler_phi(n / d);
    }
    return finish_report(r);
}

namespace {

void add_entry(std::set<SpectrumEntry>& out, const HermitianModel& model, const Mat3& M, uint64_t bound) {
    const ElementClass c = classify(model, M);
    if (c.order > bound) return;
    out.insert({c.order, c.type, cyclic_genus(model, M).genus});
}

}  // namespace

std::vector<SpectrumEntry> cyclic_spectrum(uint32_t q, uint64_t bound) {
    std::set<SpectrumEntry> out;
    const Mat3 id = mat_identity();

    auto fermat = HermitianModel::make(ModelTag::fermat, q);
    const Field& F = *fermat->field;
    const Elem lambda = element_of_order(F, q + 1);
    for (uint32_t a = 0; a <= q; ++a)
        for (uint32_t b = a; b <= q; ++b) {
            const Mat3 M = mat_diag(F.pow(lambda, a), F.pow(lambda, b), 1);
            if (M != id) add_entry(out, *fermat, M, bound);
        }

    GeneratorSet torus = b2_element(q, uint64_t{q} * q - 1);
    for (uint64_t d : divisors(uint64_t{q} * q - 1)) {
        const Mat3 M = mat_pow(F, torus.gens[0], d);
        if (M != id) add_entry(out, *torus.model, M, bound);
    }

    GeneratorSet s = singer(q);
    for (uint64_t d : divisors(uint64_t{q} * q - q + 1)) {
        const Mat3 M = mat_pow(F, s.gens[0], d);
        if (M != id) add_entry(out, *s.model, M, bound);
    }

    GeneratorSet sylow = host("sylow", q);
    for (const Mat3& g : sylow.gens) add_entry(out, *sylow.model, g, bound);
    for (uint64_t d : divisors(q + 1)) {
        if (d == 1) continue;
        GeneratorSet e = e_element(q, d);
        add_entry(out, *e.model, e.gens[0], bound);
    }
    return {out.begin(), out.end()};
}

}  // namespace uqg
