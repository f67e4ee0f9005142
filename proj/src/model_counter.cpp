#include "uqg/model_counter.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "json.hpp"
#include "uqg/arith.hpp"
#include "uqg/error.hpp"

namespace uqg {

namespace {

struct Setting {
    uint32_t q, p, h;
    FieldPtr F;
};

Setting setting(uint32_t q) {
    auto pp = prime_power(q);
    if (!pp) fail("NotAPrimePower", std::to_string(q) + " is not a prime power");
    if (uint64_t{q} * q > kCountFieldCap) fail("FieldTooLarge", "q^2 exceeds " + std::to_string(kCountFieldCap));
    return {q, static_cast<uint32_t>(pp->first), static_cast<uint32_t>(pp->second), Field::make(pp->first, 2 * pp->second)};
}

// Sum over x in GF(q^2) of per(x), split across threads.
uint64_t sum_over_field(const Field& F, unsigned threads, const std::function<uint64_t(Elem)>& per) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(1, F.size() / 4096)));
    std::vector<uint64_t> part(threads, 0);
    auto work = [&](unsigned t) {
        for (uint64_t x = t; x < F.size(); x += threads) part[t] += per(static_cast<Elem>(x));
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    uint64_t total = 0;
    for (uint64_t v : part) total += v;
    return total;
}

// Number of y in GF(q^2) with y^m = f.
uint64_t kummer_roots(const Field& F, uint64_t m, Elem f) {
    if (f == 0) return 1;
    const uint64_t g = gcd(m, F.size() - 1);
    return F.pow(f, (F.size() - 1) / g) == 1 ? g : 0;
}

// sum_{i=1..h} c_i x^(q/p^i)
Elem additive(const Field& F, const Setting& s, const std::vector<Elem>& coeff, Elem x) {
    Elem acc = 0;
    uint64_t e = s.q;
    for (uint32_t i = 0; i < s.h; ++i) {
        e /= s.p;
        acc = F.add(acc, F.mul(coeff[i], F.pow(x, e)));
    }
    return acc;
}

PointCount finish(uint64_t points, int64_t genus, uint32_t q) {
    PointCount r;
    r.points = points;
    r.genus = genus;
    r.maximal = static_cast<int64_t>(points) == int64_t{q} * q + 1 + 2 * genus * q;
    return r;
}

}  // namespace

std::string PointCount::to_json() const {
    nlohmann::ordered_json j;
    j["N"] = points;
    j["genus"] = genus;
    j["maximal"] = maximal;
    return j.dump();
}

std::vector<Elem> valid_lambdas(uint32_t q) {
    const Setting s = setting(q);
    const Field& F = *s.F;
    const Elem minus_one = F.neg(1);
    const uint64_t norm = (uint64_t{q} - 1) / (s.p - 1);
    std::vector<Elem> out;
    for (Elem a = 1; a < F.size(); ++a)
        if (F.pow(a, norm) == minus_one) out.push_back(a);
    return out;
}

PointCount count_tipoE(uint32_t q, uint64_t d, std::optional<Elem> lambda, unsigned threads) {
    const Setting s = setting(q);
    const Field& F = *s.F;
    if (d == 0 || (q + 1) % d != 0) fail("HypothesisViolated", "d must divide q+1");
    if (!lambda) {
        auto all = valid_lambdas(q);
        if (all.empty()) fail("LambdaInvalid", "no lambda in GF(q^2) with lambda^h = -1");
        lambda = all.front();
    }
    const uint64_t norm = (uint64_t{q} - 1) / (s.p - 1);
    if (*lambda == 0 || *lambda >= F.size() || F.pow(*lambda, norm) != F.neg(1))
        fail("LambdaInvalid", "lambda^((q-1)/(p-1)) must equal -1");
    // L with L(x^p - lambda x) = x^q + x; equals sum lambda^(i-1) x^(q/p^i) when lambda is in GF(p).
    std::vector<Elem> coeff(s.h);
    coeff[0] = 1;
    uint64_t frob = s.q;
    for (uint32_t i = 1; i < s.h; ++i) {
        coeff[i] = F.mul(coeff[i - 1], F.pow(*lambda, frob / s.p));
        frob /= s.p;
    }
    const uint64_t m = (q + 1) / d;
    const uint64_t affine =
        sum_over_field(F, threads, [&](Elem x) { return kummer_roots(F, m, additive(F, s, coeff, x)); });
    const int64_t genus = static_cast<int64_t>((m - 1) * (ipow(s.p, s.h - 1) - 1) / 2);
    return finish(affine + 1, genus, q);
}

PointCount count_named_model(int which, uint32_t q, const std::map<std::string, int64_t>& params, unsigned threads) {
    const Setting s = setting(q);
    const Field& F = *s.F;
    const std::vector<Elem> ones(s.h, 1);
    const int64_t ph = static_cast<int64_t>(ipow(s.p, s.h - 1));
    switch (which) {
        case 1: {
            // sum y^(q/p^i) + omega x^(q+1) = 0 with omega^(q-1) = -1
            Elem omega = 0;
            for (Elem a = 1; a < F.size() && !omega; ++a)
                if (F.pow(a, q - 1) == F.neg(1)) omega = a;
            std::vector<uint32_t> hits(F.size(), 0);
            for (Elem y = 0; y < F.size(); ++y) ++hits[additive(F, s, ones, y)];
            const uint64_t affine = sum_over_field(F, threads, [&](Elem x) {
                return hits[F.neg(F.mul(omega, F.pow(x, q + 1)))];
            });
            return finish(affine + 1, ph * (q - s.p) / 2, q);
        }
        case 2: {
            // y^q + y = (sum x^(q/p^i))^2
            if (s.p == 2) fail("HypothesisViolated", "case 2 needs odd characteristic");
            std::vector<uint32_t> hits(F.size(), 0);
            for (Elem y = 0; y < F.size(); ++y) ++hits[F.add(F.pow(y, q), y)];
            const uint64_t affine = sum_over_field(F, threads, [&](Elem x) {
                const Elem t = additive(F, s, ones, x);
                return hits[F.mul(t, t)];
            });
            return finish(affine + 1, ph * (q - 1) / 2, q);
        }
        case 5: {
            // y^((q^2-1)/d) = x (x+1)^(q-1)
            auto it = params.find("d");
            if (it == params.end()) fail("MissingParameter", "case 5 needs d");
            const uint64_t d = static_cast<uint64_t>(it->second);
            const uint64_t n = uint64_t{q} * q - 1;
            if (d == 0 || n % d != 0) fail("HypothesisViolated", "d must divide q^2-1");
            const uint64_t affine = sum_over_field(F, threads, [&](Elem x) {
                return kummer_roots(F, n / d, F.mul(x, F.pow(F.add(x, 1), q - 1)));
            });
            const int64_t genus = static_cast<int64_t>((q + 1 - gcd(d, q + 1)) * (q - 1) / (2 * d));
            return finish(affine + 1, genus, q);
        }
        default:
            fail("HypothesisViolated", "only cases 1, 2 and 5 have counted models");
    }
}

}  // namespace uqg
