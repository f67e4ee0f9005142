#include "uqg/search.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <regex>

#include "uqg/arith.hpp"

namespace uqg {

namespace {

Census cyclic_product_census(const std::vector<uint64_t>& factors) {
    Census out{{1, 1}};
    for (uint64_t n : factors) {
        Census next;
        for (const auto& [o, c] : out)
            for (uint64_t d : divisors(n)) next[lcm(o, d)] += c * euler_phi(d);
        out = std::move(next);
    }
    return out;
}

Census cyclic_census(uint64_t n) { return cyclic_product_census({n}); }

Census direct_product(const Census& a, const Census& b) {
    Census out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) out[lcm(x, y)] += cx * cy;
    return out;
}

// Factors of a top-level direct product, outer parentheses removed.
std::vector<std::string> split_product(const std::string& s) {
    std::vector<std::string> out(1);
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ':' && depth == 0) return {s};
        if (c == 'x' && depth == 0) {
            out.emplace_back();
            continue;
        }
        out.back() += c;
    }
    for (auto& f : out)
        if (f.size() > 2 && f.front() == '(' && f.back() == ')') f = f.substr(1, f.size() - 2);
    return out;
}

std::string squeeze(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '{' && c != '}' && c != '$' && c != '\\') out += c;
    return out;
}

}  // namespace

std::optional<Census> named_census(const std::string& structure) {
    const std::string s = squeeze(structure);
    std::smatch m;
    if (const auto factors = split_product(s); factors.size() > 1) {
        Census out{{1, 1}};
        for (const auto& f : factors) {
            auto c = named_census(f);
            if (!c) return std::nullopt;
            out = direct_product(out, *c);
        }
        return out;
    }
    static const std::regex product("^C_(\\d+)((?:(?:x|times)C_\\d+)*)$");
    if (std::regex_match(s, m, product)) {
        std::vector<uint64_t> f{std::stoull(m[1])};
        static const std::regex factor("C_(\\d+)");
        const std::string rest = m[2];
        for (auto it = std::sregex_iterator(rest.begin(), rest.end(), factor); it != std::sregex_iterator(); ++it)
            f.push_back(std::stoull((*it)[1]));
        return cyclic_product_census(f);
    }
    static const std::regex dihedral("^D_(\\d+)$");
    if (std::regex_match(s, m, dihedral)) {
        const uint64_t n = std::stoull(m[1]);
        if (n % 2 || n < 4) return std::nullopt;
        Census c = cyclic_census(n / 2);
        c[2] += n / 2;
        return c;
    }
    static const std::regex dicyclic("^(?:Dic|Q)_(\\d+)$");
    if (std::regex_match(s, m, dicyclic)) {
        const uint64_t n = std::stoull(m[1]);
        if (n % 4) return std::nullopt;
        Census c = cyclic_census(n / 2);
        c[4] += n / 2;
        return c;
    }
    // A : C_2 with A abelian of odd order and C_2 acting by inversion.
    static const std::regex gen_dihedral("^\\(?(C_\\d+(?:xC_\\d+)+)\\)?:C_2$");
    if (std::regex_match(s, m, gen_dihedral)) {
        auto c = named_census(m[1]);
        if (!c) return std::nullopt;
        uint64_t order = 0, odd = 1;
        for (const auto& [o, k] : *c) {
            order += k;
            if (o % 2 == 0) odd = 0;
        }
        if (!odd) return std::nullopt;
        (*c)[2] += order;
        return c;
    }
    // C_p : C_k acting faithfully is a Frobenius group.
    static const std::regex frobenius("^C_(\\d+):C_(\\d+)$");
    if (std::regex_match(s, m, frobenius)) {
        const uint64_t p = std::stoull(m[1]), k = std::stoull(m[2]);
        if (!is_prime(p) || (p - 1) % k) return std::nullopt;
        Census c{{1, 1}, {p, p - 1}};
        for (uint64_t d : divisors(k))
            if (d > 1) c[d] += p * euler_phi(d);
        return c;
    }
    if (s == "C_4wrC_2" || s == "SG(32,11)") return Census{{1, 1}, {2, 7}, {4, 16}, {8, 8}};
    if (s == "D_8oC_4") return Census{{1, 1}, {2, 7}, {4, 8}};
    if (s == "Sym(3)" || s == "S_3") return Census{{1, 1}, {2, 3}, {3, 2}};
    if (s == "Alt(4)" || s == "A_4") return Census{{1, 1}, {2, 3}, {3, 8}};
    if (s == "SL(2,3)") return Census{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}};
    if (s == "SD_16") return Census{{1, 1}, {2, 5}, {4, 6}, {8, 4}};
    if (s == "M_16") return Census{{1, 1}, {2, 3}, {4, 4}, {8, 8}};
    return std::nullopt;
}

uint64_t center_size(const Group& G) {
    const Field& F = *G.model()->field;
    uint64_t n = 0;
    for (const Mat3& z : G.elements()) {
        bool central = true;
        for (const Mat3& g : G.generators())
            if (normalize(F, mat_mul(F, z, g)) != normalize(F, mat_mul(F, g, z))) {
                central = false;
                break;
            }
        n += central;
    }
    return n;
}

bool matches(const Group& G, const SearchTarget& target) {
    if (G.order() != target.order) return false;
    if (!target.census.empty() && census(G) != target.census) return false;
    if (target.center && center_size(G) != *target.center) return false;
    return true;
}

std::vector<GeneratorSet> cyclic_candidates(uint32_t q) {
    std::vector<GeneratorSet> out;
    auto fermat = HermitianModel::make(ModelTag::fermat, q);
    const Field& F = *fermat->field;
    const Elem lambda = element_of_order(F, q + 1);
    for (uint32_t a = 0; a <= q; ++a)
        for (uint32_t b = a; b <= q; ++b)
            if (a || b) out.push_back({fermat, {mat_diag(F.pow(lambda, a), F.pow(lambda, b), 1)}, "diagonal"});
    GeneratorSet torus = b2_element(q, uint64_t{q} * q - 1);
    for (uint64_t d : divisors(uint64_t{q} * q - 1))
        if (d < uint64_t{q} * q - 1) out.push_back({torus.model, {mat_pow(F, torus.gens[0], d)}, "torus"});
    GeneratorSet s = singer(q);
    for (uint64_t d : divisors(uint64_t{q} * q - q + 1))
        if (d < uint64_t{q} * q - q + 1) out.push_back({s.model, {mat_pow(F, s.gens[0], d)}, "singer"});
    GeneratorSet sylow = host("sylow", q);
    for (const Mat3& g : sylow.gens) out.push_back({sylow.model, {g}, "sylow"});
    for (size_t i = 0; i + 1 < sylow.gens.size(); ++i)
        out.push_back({sylow.model, {normalize(F, mat_mul(F, sylow.gens[i], sylow.gens[i + 1]))}, "sylow"});
    for (uint64_t d : divisors(q + 1))
        if (d > 1) {
            GeneratorSet e = e_element(q, d);
            out.push_back({e.model, e.gens, "type-E"});
        }
    return out;
}

namespace {

constexpr uint64_t kPoolCap = 400000;

struct Pool {
    GeneratorSet host;
    std::vector<Mat3> elements;  // empty when sampled by random walk
};

const Pool& pool_for(const std::string& name, uint32_t q) {
    static std::mutex mu;
    static std::map<std::pair<std::string, uint32_t>, std::unique_ptr<Pool>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{name, q}];
    if (!slot) {
        slot = std::make_unique<Pool>();
        slot->host = host(name, q);
        const uint64_t expected = host_order(name, q);
        if (expected && expected <= kPoolCap) slot->elements = closure(slot->host.model, slot->host.gens, kPoolCap).elements();
    }
    return *slot;
}

Mat3 sample(const Pool& pool, std::mt19937_64& rng) {
    if (!pool.elements.empty()) return pool.elements[rng() % pool.elements.size()];
    const Field& F = *pool.host.model->field;
    Mat3 x = mat_identity();
    for (int step = 0; step < 40; ++step) x = normalize(F, mat_mul(F, x, pool.host.gens[rng() % pool.host.gens.size()]));
    return x;
}

}  // namespace

SearchHit seeded_search(uint32_t q, const SearchTarget& target, uint64_t seed, uint64_t budget,
                        const std::vector<std::string>& hosts) {
    const uint64_t n = target.order;
    if (n == 0 || n > kDefaultClosureCap) fail("HypothesisViolated", "target order out of range");
    std::vector<std::string> names = hosts.empty() ? host_names() : hosts;
    names.erase(std::remove_if(names.begin(), names.end(),
                               [&](const std::string& h) {
                                   const uint64_t o = host_order(h, q);
                                   return o != 0 && o % n != 0;
                               }),
                names.end());
    if (names.empty()) fail("NotFound", "no host has order divisible by " + std::to_string(n));

    std::vector<uint64_t> orders;
    for (const auto& [o, c] : target.census) orders.push_back(o);
    const bool cyclic = target.census.empty() || target.census.count(n);

    std::mt19937_64 rng(seed);
    for (uint64_t attempt = 0; attempt < budget; ++attempt) {
        const std::string& name = names[attempt % names.size()];
        const Pool& pool = pool_for(name, q);
        const HermitianModel& model = *pool.host.model;
        const Field& F = *model.field;

        // Cut each sample down to an element whose order divides n.
        auto draw = [&](uint64_t want) -> std::optional<Mat3> {
            const Mat3 x = sample(pool, rng);
            const uint64_t o = proj_order(model, x);
            uint64_t g = gcd(o, want);
            if (!orders.empty()) {
                uint64_t best = 1;
                for (uint64_t t : orders)
                    if (g % t == 0) best = t;
                g = best;
            }
            if (g == 1) return std::nullopt;
            return normalize(F, mat_pow(F, x, o / g));
        };

        std::vector<Mat3> gens;
        const int k = n == 1 ? 0 : (cyclic && attempt % 3 == 0) ? 1 : (attempt % 7 == 6 ? 3 : 2);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            auto x = draw(n);
            if (!x || (k == 1 && !order_divides(model, *x, n))) ok = false;
            else gens.push_back(*x);
        }
        if (!ok) continue;
        if (gens.empty()) gens.push_back(mat_identity());
        Group G = [&]() -> Group {
            try {
                return closure(pool.host.model, gens, n);
            } catch (const Error&) {
                return Group(pool.host.model, {}, {});
            }
        }();
        if (!matches(G, target)) continue;
        GenusReport report = quotient_genus(G, 1);
        if (target.genus && report.genus != *target.genus) continue;
        return {{pool.host.model, gens, "search"}, report, name, attempt};
    }
    fail("NotFound", "no subgroup of order " + std::to_string(n) + " within budget");
}

}  // namespace uqg
